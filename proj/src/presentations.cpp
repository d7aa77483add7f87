#include "chowcalc/presentations.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace chowcalc {

DiagonalPresentation::DiagonalPresentation(std::vector<DiagonalGenerator> generators)
    : generators_(std::move(generators)) {
    std::unordered_set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.degree == 0)
            throw std::invalid_argument("generator of degree zero");
        if (g.annihilator < 0)
            throw std::invalid_argument("negative annihilator");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name: " + g.name);
    }
}

Grading DiagonalPresentation::grading() const {
    Grading g;
    g.reserve(generators_.size());
    for (const auto& gen : generators_)
        g.push_back(gen.degree);
    return g;
}

std::vector<std::string> DiagonalPresentation::names() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& gen : generators_)
        out.push_back(gen.name);
    return out;
}

AbelianGroupType component_closed_form(const DiagonalPresentation& p, std::uint32_t d) {
    if (d == 0)
        return AbelianGroupType({Int(0)});
    std::vector<Int> orders;
    for (const Monomial& m : monomials_of_weighted_degree(p.grading(), d)) {
        Int g = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0)
                g = gcd(g, p.generators()[i].annihilator);
        orders.push_back(g);
    }
    return AbelianGroupType(std::move(orders));
}

GradedTable graded_table(const DiagonalPresentation& p, std::uint32_t cutoff) {
    GradedTable t;
    t.cutoff = cutoff;
    t.components.reserve(cutoff + 1);
    for (std::uint32_t d = 0; d <= cutoff; ++d)
        t.components.push_back(component_closed_form(p, d));
    return t;
}

AbelianGroupType component_oracle(const Grading& grading,
                                  const std::vector<IntPolynomial>& ideal_generators,
                                  std::uint32_t d) {
    const std::vector<Monomial> basis = monomials_of_weighted_degree(grading, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);

    IntMatrix rows(0, basis.size());
    for (const auto& g : ideal_generators) {
        if (g.grading() != grading)
            throw std::invalid_argument("ideal generator from a different ring");
        auto deg = g.homogeneous_degree();
        if (!deg)
            throw std::invalid_argument("ideal generator is not homogeneous");
        if (g.is_zero() || *deg > d)
            continue;
        for (const Monomial& u : monomials_of_weighted_degree(grading, d - *deg)) {
            IntPolynomial prod = IntPolynomial::monomial(grading, u, 1) * g;
            std::vector<Int> row(basis.size(), 0);
            for (const auto& [m, c] : prod.terms())
                row[index.at(m)] = c;
            rows.append_row(row);
        }
    }
    return cokernel(basis.size(), rows);
}

std::vector<std::string> reduce_mod_l(const DiagonalPresentation& p, const Int& l) {
    if (!is_prime(l))
        throw std::invalid_argument("modulus is not prime");
    std::vector<std::string> out;
    for (const auto& g : p.generators())
        if (g.annihilator % l == 0)
            out.push_back(g.name);
    return out;
}

std::uint64_t hilbert_mod_l(const DiagonalPresentation& p, const Int& l, std::uint32_t d) {
    if (!is_prime(l))
        throw std::invalid_argument("modulus is not prime");
    Grading surviving;
    for (const auto& g : p.generators())
        if (g.annihilator % l == 0)
            surviving.push_back(g.degree);
    return monomials_of_weighted_degree(surviving, d).size();
}

DiagonalPresentation localize_presentation(const DiagonalPresentation& p,
                                           const std::set<Int>& s) {
    for (const Int& q : s)
        if (!is_prime(q))
            throw std::invalid_argument("non-prime in localization set");
    std::vector<DiagonalGenerator> gens;
    for (auto g : p.generators()) {
        for (const Int& q : s)
            while (g.annihilator != 0 && g.annihilator % q == 0)
                g.annihilator /= q;
        if (g.annihilator != 1)
            gens.push_back(std::move(g));
    }
    return DiagonalPresentation(std::move(gens));
}

}  // namespace chowcalc
