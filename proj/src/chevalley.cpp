#include "chowcalc/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowcalc {

namespace {

Int prime_of(const Int& q) {
    auto pp = prime_power_base(q);
    if (!pp)
        throw std::invalid_argument("q must be a prime power >= 2");
    return pp->first;
}

void require_odd_prime_to_q(const Int& q, const Int& l) {
    if (!is_prime(l))
        throw std::invalid_argument("l must be prime");
    if (l == 2)
        throw std::invalid_argument("l = 2 Sylow shapes are out of scope");
    if (q % l == 0)
        throw std::invalid_argument("l must not divide q");
    prime_of(q);
}

}  // namespace

std::pair<DiagonalPresentation, GradedTable> chow_BG(const ChevalleyQuery& query) {
    if (!query.inverted.empty())
        throw std::invalid_argument("chow_BG expects an empty inverted set");
    return twisted_coinvariants(query.kind, query.q, query.cutoff);
}

std::pair<DiagonalPresentation, GradedTable> theorem_a(
    const ChevalleyQuery& query, std::vector<std::string>* warnings) {
    Int p = prime_of(query.q);
    std::set<Int> required;
    if (query.kind.family() == GroupKind::Family::SL) {
        required.insert(p);
        Int rest = query.q - 1;
        for (Int f = 2; rest > 1; ++f) {
            if (rest % f == 0) {
                required.insert(f);
                while (rest % f == 0)
                    rest /= f;
            }
        }
    } else {
        required.insert(p);
        if (query.q % 4 != 1)
            required.insert(2);
    }
    for (const Int& r : required)
        if (!query.inverted.count(r))
            throw std::invalid_argument(
                "inverted set is missing the required prime " + r.get_str());
    if (warnings)
        for (const Int& s : query.inverted)
            if (!required.count(s))
                warnings->push_back("inverting " + s.get_str() +
                                   " is not required for this group");

    ChevalleyQuery base = query;
    base.inverted.clear();
    auto [pres, table] = chow_BG(base);
    DiagonalPresentation localized = localize_presentation(pres, query.inverted);
    return {localized, graded_table(localized, query.cutoff)};
}

unsigned mult_order(const Int& q, const Int& l) {
    if (!is_prime(l))
        throw std::invalid_argument("l must be prime");
    if (q % l == 0)
        throw std::invalid_argument("l divides q");
    Int acc = q % l;
    unsigned r = 1;
    while (acc != 1) {
        acc = (acc * q) % l;
        ++r;
    }
    return r;
}

unsigned l_valuation(const Int& m, const Int& l) {
    if (m < 1)
        throw std::invalid_argument("valuation of a non-positive integer");
    return valuation(m, l);
}

SylowShape sylow_shape(unsigned n, const Int& q, const Int& l) {
    require_odd_prime_to_q(q, l);
    SylowShape shape;
    shape.l = l;
    unsigned r = mult_order(q, l);
    shape.b = l_valuation(pow_int(q, r) - 1, l);
    unsigned m = n / r;
    // base-l digits of m: digit a_i contributes a_i towers of height i
    unsigned long lu = l.get_ui();
    for (unsigned height = 0; m > 0; ++height, m /= lu)
        for (unsigned c = 0; c < m % lu; ++c)
            shape.towers.push_back(height);
    std::sort(shape.towers.begin(), shape.towers.end());
    return shape;
}

unsigned glq_l_part_order(unsigned n, const Int& q, const Int& l) {
    if (!is_prime(l))
        throw std::invalid_argument("l must be prime");
    if (q % l == 0)
        throw std::invalid_argument("l divides q");
    unsigned total = 0;
    Int qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= q;
        Int m = qi - 1;
        if (m >= 1 && m % l == 0)
            total += valuation(m, l);
    }
    return total;
}

unsigned shape_order_exponent(const SylowShape& shape) {
    unsigned long lu = shape.l.get_ui();
    unsigned total = 0;
    for (unsigned height : shape.towers) {
        unsigned long li = 1;
        unsigned long geometric = 0;  // 1 + l + ... + l^{height-1}
        for (unsigned h = 0; h < height; ++h) {
            geometric += li;
            li *= lu;
        }
        total += shape.b * static_cast<unsigned>(li) + static_cast<unsigned>(geometric);
    }
    return total;
}

GradedTable sylow_chow_model(const SylowShape& shape, std::uint32_t d) {
    if (shape.b < 1)
        throw std::invalid_argument("shape exponent must be at least 1");
    if (d == 0)
        throw std::invalid_argument("cutoff must be positive");
    GradedTable acc;
    acc.cutoff = d - 1;
    acc.components.assign(d, AbelianGroupType());
    acc.components[0] = AbelianGroupType({Int(0)});
    for (unsigned height : shape.towers)
        acc = kunneth_tensor(acc, iterate_tower(shape.l, shape.b, height, d), d - 1);
    return acc;
}

bool check_restriction_embedding(unsigned n, const Int& q, const Int& l, std::uint32_t d) {
    SylowShape shape = sylow_shape(n, q, l);
    GradedTable model = sylow_chow_model(shape, d + 1);
    auto [pres, table] = twisted_coinvariants(GroupKind::gl(n), q, d);
    if (table.at(0) != AbelianGroupType({Int(0)}) ||
        model.at(0) != AbelianGroupType({Int(0)}))
        return false;
    for (std::uint32_t k = 1; k <= d; ++k)
        if (!embeds(l_primary_part(table.at(k), l), model.at(k), l))
            return false;
    return true;
}

bool guillot_check(unsigned n, const Int& q, const Int& l, std::uint32_t d) {
    require_odd_prime_to_q(q, l);
    auto [pres, table] = twisted_coinvariants(GroupKind::gl(n), q, 0);
    unsigned r = mult_order(q, l);
    unsigned m = n / r;
    std::vector<std::string> expected;
    Grading survivor_degrees;
    for (unsigned i = 1; i <= m; ++i) {
        expected.push_back("c" + std::to_string(i * r));
        survivor_degrees.push_back(i * r);
    }
    if (reduce_mod_l(pres, l) != expected)
        return false;
    for (std::uint32_t k = 0; k <= d; ++k)
        if (hilbert_mod_l(pres, l, k) !=
            monomials_of_weighted_degree(survivor_degrees, k).size())
            return false;
    return true;
}

DiagonalPresentation elementary_abelian_char0(unsigned a, const Int& p) {
    if (a < 1)
        throw std::invalid_argument("need at least one factor");
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    std::vector<DiagonalGenerator> gens;
    for (unsigned i = 1; i <= a; ++i)
        gens.push_back({"t" + std::to_string(i), 1, p});
    return DiagonalPresentation(std::move(gens));
}

}  // namespace chowcalc
