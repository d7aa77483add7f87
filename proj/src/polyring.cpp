#include "chowcalc/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace chowcalc {

namespace {

void require_same_grading(const Grading& a, const Grading& b) {
    if (a != b)
        throw std::invalid_argument("polynomial arithmetic across different gradings");
}

// Exponents for generators [i, n) contributing exactly d, appended to prefix.
void enumerate_rest(const Grading& grading, std::size_t i, std::uint32_t d,
                    Monomial& prefix, std::vector<Monomial>& out) {
    if (i == grading.size()) {
        if (d == 0)
            out.push_back(prefix);
        return;
    }
    const std::uint32_t di = grading[i];
    for (std::uint32_t e = 0; e * di <= d; ++e) {
        prefix.push_back(e);
        enumerate_rest(grading, i + 1, d - e * di, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::uint32_t weighted_degree(const Monomial& m, const Grading& grading) {
    if (m.size() != grading.size())
        throw std::invalid_argument("monomial length does not match grading");
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * grading[i];
    return d;
}

std::vector<Monomial> monomials_of_weighted_degree(const Grading& grading, std::uint32_t d) {
    for (std::uint32_t di : grading)
        if (di == 0)
            throw std::invalid_argument("generator of degree zero in grading");
    std::vector<Monomial> out;
    Monomial prefix;
    prefix.reserve(grading.size());
    enumerate_rest(grading, 0, d, prefix, out);
    return out;
}

IntPolynomial IntPolynomial::constant(const Grading& grading, const Int& c) {
    IntPolynomial f(grading);
    f.add_term(Monomial(grading.size(), 0), c);
    return f;
}

IntPolynomial IntPolynomial::generator(const Grading& grading, std::size_t i) {
    if (i >= grading.size())
        throw std::out_of_range("generator index");
    Monomial m(grading.size(), 0);
    m[i] = 1;
    IntPolynomial f(grading);
    f.add_term(m, 1);
    return f;
}

IntPolynomial IntPolynomial::monomial(const Grading& grading, Monomial m, const Int& c) {
    if (m.size() != grading.size())
        throw std::invalid_argument("monomial length does not match grading");
    IntPolynomial f(grading);
    f.add_term(m, c);
    return f;
}

void IntPolynomial::add_term(const Monomial& m, const Int& c) {
    if (m.size() != grading_.size())
        throw std::invalid_argument("monomial length does not match grading");
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& g) const {
    require_same_grading(grading_, g.grading_);
    IntPolynomial out = *this;
    for (const auto& [m, c] : g.terms_)
        out.add_term(m, c);
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& g) const { return *this + (-g); }

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(grading_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& g) const {
    require_same_grading(grading_, g.grading_);
    IntPolynomial out(grading_);
    Monomial prod(grading_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : g.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i)
                prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    IntPolynomial out(grading_);
    if (c == 0)
        return out;
    for (const auto& [m, k] : terms_)
        out.terms_.emplace(m, k * c);
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial acc = constant(grading_, 1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::optional<std::uint32_t> IntPolynomial::homogeneous_degree() const {
    if (terms_.empty())
        return 0;
    std::uint32_t d = weighted_degree(terms_.begin()->first, grading_);
    for (const auto& [m, c] : terms_)
        if (weighted_degree(m, grading_) != d)
            return std::nullopt;
    return d;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != grading_.size())
        throw std::invalid_argument("name count does not match grading");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        bool constant_term = true;
        for (std::uint32_t e : m)
            if (e != 0)
                constant_term = false;
        if (a != 1 || constant_term)
            os << a.get_str();
        bool need_sep = a != 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (need_sep)
                os << "*";
            os << names[i];
            if (m[i] > 1)
                os << "^" << m[i];
            need_sep = true;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial substitute(const IntPolynomial& f, const std::vector<IntPolynomial>& images) {
    if (images.size() != f.generator_count())
        throw std::invalid_argument("image count does not match generator count");
    if (images.empty()) {
        IntPolynomial out(Grading{});
        for (const auto& [m, c] : f.terms())
            out.add_term(m, c);
        return out;
    }
    const Grading& target = images[0].grading();
    for (const auto& g : images)
        require_same_grading(target, g.grading());
    IntPolynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        IntPolynomial term = IntPolynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0)
                term = term * images[i].pow(m[i]);
        out = out + term;
    }
    return out;
}

}  // namespace chowcalc
