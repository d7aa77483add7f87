#include "chowcalc/wreath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chowcalc {

Label Label::make_atom(std::string name) {
    Label l;
    l.kind = Kind::Atom;
    l.atom = std::move(name);
    return l;
}

Label Label::make_tensor(std::vector<Label> members) {
    Label l;
    l.kind = Kind::Tensor;
    l.children = std::move(members);
    return l;
}

Label Label::make_gamma(Label source) {
    Label l;
    l.kind = Kind::Gamma;
    l.children.push_back(std::move(source));
    return l;
}

Label Label::make_alpha(Label source, std::uint32_t shift) {
    Label l;
    l.kind = Kind::Alpha;
    l.children.push_back(std::move(source));
    l.shift = shift;
    return l;
}

std::string Label::to_string() const {
    switch (kind) {
        case Kind::Atom:
            return atom;
        case Kind::Tensor: {
            std::string s = "[";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i > 0)
                    s += ",";
                s += children[i].to_string();
            }
            return s + "]";
        }
        case Kind::Gamma:
            return "g(" + children.at(0).to_string() + ")";
        case Kind::Alpha:
            return "a" + std::to_string(shift) + "(" + children.at(0).to_string() + ")";
    }
    throw std::logic_error("unreachable");
}

void WreathBasis::validate() const {
    std::set<std::string> seen;
    for (const auto& e : elements) {
        if (!seen.insert(e.label.to_string()).second)
            throw std::invalid_argument("duplicate label: " + e.label.to_string());
        if (e.order < 0 || e.order == 1 || (e.order > 1 && !prime_power_base(e.order)))
            throw std::invalid_argument("order must be 0 or a prime power");
        if (mode == GradingMode::Codimension && e.degree > cutoff)
            throw std::invalid_argument("codimension exceeds the cutoff");
    }
}

namespace {

unsigned long prime_ui(const Int& l) {
    if (!is_prime(l) || !l.fits_ulong_p())
        throw std::invalid_argument("expected a (machine-size) prime");
    return l.get_ui();
}

bool order_matches_prime(const Int& order, const Int& l) {
    if (order == 0)
        return true;
    auto pp = prime_power_base(order);
    return pp && pp->first == l;
}

}  // namespace

std::vector<std::size_t> r_set(const WreathBasis& b, const Int& l) {
    if (b.mode != GradingMode::Dimension)
        throw std::invalid_argument("r_set expects a dimension-graded basis");
    prime_ui(l);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        if (b.elements[i].degree > 0 && order_matches_prime(b.elements[i].order, l))
            out.push_back(i);
    return out;
}

std::vector<std::vector<std::size_t>> cyclic_orbits(std::size_t n, unsigned l,
                                                    const std::vector<std::size_t>& excluded_diagonal) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0 || l == 0)
        return out;
    std::set<std::size_t> excluded(excluded_diagonal.begin(), excluded_diagonal.end());
    std::vector<std::size_t> tuple(l, 0);
    auto is_canonical = [&] {
        for (unsigned r = 1; r < l; ++r)
            for (unsigned k = 0; k < l; ++k) {
                std::size_t rotated = tuple[(k + r) % l];
                if (rotated < tuple[k])
                    return false;
                if (rotated > tuple[k])
                    break;
            }
        return true;
    };
    while (true) {
        bool diagonal = std::all_of(tuple.begin(), tuple.end(),
                                    [&](std::size_t v) { return v == tuple[0]; });
        if (!(diagonal && excluded.count(tuple[0])) && is_canonical())
            out.push_back(tuple);
        // odometer step in lex order
        unsigned pos = l;
        while (pos > 0 && tuple[pos - 1] == n - 1)
            --pos;
        if (pos == 0)
            break;
        ++tuple[pos - 1];
        for (unsigned k = pos; k < l; ++k)
            tuple[k] = 0;
    }
    return out;
}

WreathBasis f_l(const WreathBasis& b, const Int& l, std::size_t* suppressed_rank_one) {
    if (b.mode != GradingMode::Dimension)
        throw std::invalid_argument("f_l expects a dimension-graded basis");
    b.validate();
    unsigned long lu = prime_ui(l);
    std::size_t suppressed = 0;
    std::vector<std::size_t> r = r_set(b, l);
    std::set<std::size_t> r_lookup(r.begin(), r.end());

    WreathBasis out;
    out.mode = GradingMode::Dimension;
    for (const auto& rep : cyclic_orbits(b.elements.size(), static_cast<unsigned>(lu), r)) {
        std::uint32_t degree = 0;
        Int order = 0;
        std::vector<Label> members;
        for (std::size_t idx : rep) {
            degree += b.elements[idx].degree;
            order = gcd(order, b.elements[idx].order);
            members.push_back(b.elements[idx].label);
        }
        if (order == 1) {
            ++suppressed;
            continue;
        }
        out.elements.push_back({Label::make_tensor(std::move(members)), degree, order});
    }
    for (std::size_t i : r) {
        const auto& e = b.elements[i];
        Int gamma_order = e.order == 0 ? Int(0) : Int(e.order * l);
        out.elements.push_back(
            {Label::make_gamma(e.label), e.degree * static_cast<std::uint32_t>(lu), gamma_order});
        for (std::uint32_t j = e.degree + 1; j < e.degree * lu; ++j)
            out.elements.push_back({Label::make_alpha(e.label, j), j, l});
    }
    out.validate();
    if (suppressed_rank_one)
        *suppressed_rank_one = suppressed;
    return out;
}

bool check_gamma_relations(const WreathBasis& b, const Int& l) {
    unsigned long lu = prime_ui(l);
    WreathBasis decomposed = f_l(b, l);
    std::map<std::string, Int> orders;
    for (const auto& e : decomposed.elements)
        orders.emplace(e.label.to_string(), e.order);

    for (std::size_t i : r_set(b, l)) {
        const auto& e = b.elements[i];
        if (e.order <= 1)
            continue;
        auto it = orders.find(Label::make_gamma(e.label).to_string());
        if (it == orders.end())
            return false;
        // subgroup generated by l * gamma inside Z/order(gamma)
        Int subgroup_order = it->second / gcd(it->second, l);
        Int diagonal_order = e.order;  // gcd of l copies of the order
        if (subgroup_order != diagonal_order)
            return false;
    }

    std::size_t non_diagonal = 0;
    for (const auto& rep : cyclic_orbits(2, static_cast<unsigned>(lu), {}))
        if (std::any_of(rep.begin(), rep.end(),
                        [&](std::size_t v) { return v != rep[0]; }))
            ++non_diagonal;
    Int expected = (pow_int(Int(2), static_cast<unsigned>(lu)) - 2) / l;
    return Int(static_cast<unsigned long>(non_diagonal)) == expected;
}

namespace {

const BasedElement* find_unit(const WreathBasis& b) {
    const BasedElement* unit = nullptr;
    for (const auto& e : b.elements) {
        if (e.degree == 0) {
            if (e.label != Label::make_atom("1") || e.order != 0 || unit)
                return nullptr;
            unit = &e;
        }
    }
    return unit;
}

Label power_of_t(std::uint32_t s) {
    return Label::make_atom(s == 1 ? "t" : "t^" + std::to_string(s));
}

// Lex-least-rotation representatives of tuples with codimension sum below
// the budget, in ascending order.
void pruned_orbit_reps(std::size_t n, unsigned l, const std::vector<std::uint32_t>& codims,
                       std::uint32_t budget, const std::set<std::size_t>& excluded_diagonal,
                       std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> tuple(l, 0);
    auto is_canonical = [&] {
        for (unsigned r = 1; r < l; ++r)
            for (unsigned k = 0; k < l; ++k) {
                std::size_t rotated = tuple[(k + r) % l];
                if (rotated < tuple[k])
                    return false;
                if (rotated > tuple[k])
                    break;
            }
        return true;
    };
    auto rec = [&](auto&& self, unsigned pos, std::uint32_t used) -> void {
        if (pos == l) {
            bool diagonal = std::all_of(tuple.begin(), tuple.end(),
                                        [&](std::size_t v) { return v == tuple[0]; });
            if (!(diagonal && excluded_diagonal.count(tuple[0])) && is_canonical())
                out.push_back(tuple);
            return;
        }
        for (std::size_t idx = 0; idx < n; ++idx) {
            if (used + codims[idx] >= budget)
                continue;
            tuple[pos] = idx;
            self(self, pos + 1, used + codims[idx]);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

WreathBasis stable_f_l(const WreathBasis& b, const Int& l, std::uint32_t n_stab) {
    if (b.mode != GradingMode::Codimension)
        throw std::invalid_argument("stable_f_l expects a codimension-graded basis");
    b.validate();
    const std::uint32_t cutoff = b.cutoff;
    if (n_stab < cutoff)
        throw std::invalid_argument("stabilization dimension below the cutoff");
    if (!find_unit(b))
        throw std::invalid_argument("missing unit at codimension 0");
    unsigned long lu = prime_ui(l);

    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        if (order_matches_prime(b.elements[i].order, l))
            r.push_back(i);  // dimension n_stab - codim is positive throughout
    std::set<std::size_t> r_lookup(r.begin(), r.end());

    WreathBasis out;
    out.mode = GradingMode::Codimension;
    out.cutoff = cutoff;

    std::vector<std::uint32_t> codims;
    for (const auto& e : b.elements)
        codims.push_back(e.degree);

    // gamma of the unit is the new unit; alpha shifts of the unit land at
    // codimensions 0 < s < (l-1) * n_stab and become the powers of t
    out.elements.push_back({Label::make_atom("1"), 0, 0});
    for (std::uint32_t s = 1; s < cutoff && s < (lu - 1) * n_stab; ++s)
        out.elements.push_back({power_of_t(s), s, l});

    std::vector<std::vector<std::size_t>> reps;
    pruned_orbit_reps(b.elements.size(), static_cast<unsigned>(lu), codims, cutoff,
                      r_lookup, reps);
    for (const auto& rep : reps) {
        std::uint32_t codim = 0;
        Int order = 0;
        std::vector<Label> members;
        for (std::size_t idx : rep) {
            codim += b.elements[idx].degree;
            order = gcd(order, b.elements[idx].order);
            members.push_back(b.elements[idx].label);
        }
        if (order == 1)
            continue;
        out.elements.push_back({Label::make_tensor(std::move(members)), codim, order});
    }

    for (std::size_t i : r) {
        const auto& e = b.elements[i];
        if (e.degree == 0)
            continue;  // unit handled above
        std::uint32_t gamma_codim = static_cast<std::uint32_t>(lu) * e.degree;
        std::uint32_t dim = n_stab - e.degree;
        if (gamma_codim < cutoff) {
            Int gamma_order = e.order == 0 ? Int(0) : Int(e.order * l);
            out.elements.push_back({Label::make_gamma(e.label), gamma_codim, gamma_order});
        }
        for (std::uint32_t s = 1; gamma_codim + s < cutoff && s < (lu - 1) * dim; ++s)
            out.elements.push_back({Label::make_alpha(e.label, s), gamma_codim + s, l});
    }
    out.validate();
    return out;
}

GradedTable basis_to_table(const WreathBasis& b) {
    if (b.mode != GradingMode::Codimension)
        throw std::invalid_argument("basis_to_table expects a codimension-graded basis");
    if (b.cutoff == 0)
        throw std::invalid_argument("cutoff must be positive");
    b.validate();
    std::vector<std::vector<Int>> orders(b.cutoff);
    for (const auto& e : b.elements)
        if (e.degree < b.cutoff)
            orders[e.degree].push_back(e.order);
    GradedTable t;
    t.cutoff = b.cutoff - 1;
    for (auto& v : orders)
        t.components.push_back(AbelianGroupType(std::move(v)));
    return t;
}

WreathBasis truncated_polynomial_basis(const Int& l, unsigned b, std::uint32_t cutoff) {
    prime_ui(l);
    if (b < 1)
        throw std::invalid_argument("torsion exponent must be at least 1");
    if (cutoff == 0)
        throw std::invalid_argument("cutoff must be positive");
    WreathBasis out;
    out.mode = GradingMode::Codimension;
    out.cutoff = cutoff;
    out.elements.push_back({Label::make_atom("1"), 0, 0});
    Int order = pow_int(l, b);
    for (std::uint32_t j = 1; j < cutoff; ++j)
        out.elements.push_back({power_of_t(j), j, order});
    return out;
}

GradedTable iterate_tower(const Int& l, unsigned b, unsigned height, std::uint32_t cutoff) {
    WreathBasis basis = truncated_polynomial_basis(l, b, cutoff);
    for (unsigned h = 0; h < height; ++h)
        basis = stable_f_l(basis, l, cutoff);
    return basis_to_table(basis);
}

GradedTable kunneth_tensor(const GradedTable& a, const GradedTable& b, std::uint32_t d_max) {
    if (a.cutoff < d_max || b.cutoff < d_max)
        throw std::invalid_argument("table cutoffs below the requested degree");
    GradedTable out;
    out.cutoff = d_max;
    for (std::uint32_t d = 0; d <= d_max; ++d) {
        AbelianGroupType acc;
        for (std::uint32_t r = 0; r <= d; ++r)
            acc = direct_sum(acc, tensor_product(a.at(r), b.at(d - r)));
        out.components.push_back(std::move(acc));
    }
    return out;
}

}  // namespace chowcalc
