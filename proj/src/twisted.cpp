#include "chowcalc/twisted.hpp"

#include <map>
#include <stdexcept>

namespace chowcalc {

FrobeniusTwist::FrobeniusTwist(Int q) : q_(std::move(q)) {
    if (q_ < 2 || !prime_power_base(q_))
        throw std::invalid_argument("twist parameter must be a prime power >= 2");
}

Int FrobeniusTwist::scale(std::uint32_t degree) const { return pow_int(q_, degree); }

Int FrobeniusTwist::annihilator(std::uint32_t degree) const { return scale(degree) - 1; }

std::vector<Int> twist_ideal_generators(const std::vector<std::uint32_t>& degrees,
                                        const Int& q) {
    FrobeniusTwist twist(q);
    std::vector<Int> out;
    out.reserve(degrees.size());
    for (std::uint32_t d : degrees) {
        if (d == 0)
            throw std::invalid_argument("generator of degree zero");
        out.push_back(twist.annihilator(d));
    }
    return out;
}

namespace {

// Degree-d slice of the ideal generated by scalar multiples of single
// monomials: one row per (generator monomial m, cofactor monomial u).
IntMatrix monomial_ideal_slice(const Grading& grading,
                               const std::vector<std::pair<Monomial, Int>>& generators,
                               std::uint32_t d,
                               const std::map<Monomial, std::size_t>& index) {
    IntMatrix rows(0, index.size());
    for (const auto& [m, scalar] : generators) {
        std::uint32_t w = weighted_degree(m, grading);
        if (w > d)
            continue;
        for (const Monomial& u : monomials_of_weighted_degree(grading, d - w)) {
            Monomial v = u;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] += m[i];
            std::vector<Int> row(index.size(), 0);
            row[index.at(v)] = scalar;
            rows.append_row(row);
        }
    }
    return rows;
}

}  // namespace

bool verify_ideal_reduction(GroupKind kind, const Int& q, std::uint32_t cutoff) {
    if (cutoff < 2)
        throw std::invalid_argument("cutoff must be at least 2");
    FrobeniusTwist twist(q);
    Grading grading;
    for (std::uint32_t d : fundamental_degrees(kind))
        grading.push_back(d);

    // full twisted side: every monomial in the fundamental invariants
    std::vector<std::pair<Monomial, Int>> twisted_gens;
    for (std::uint32_t w = 1; w <= cutoff; ++w)
        for (const Monomial& m : monomials_of_weighted_degree(grading, w))
            twisted_gens.emplace_back(m, 1 - twist.scale(w));

    // diagonal side: (q^{d_i} - 1) f_i
    std::vector<std::pair<Monomial, Int>> diagonal_gens;
    for (std::size_t i = 0; i < grading.size(); ++i) {
        Monomial m(grading.size(), 0);
        m[i] = 1;
        diagonal_gens.emplace_back(std::move(m), twist.annihilator(grading[i]));
    }

    for (std::uint32_t d = 1; d <= cutoff; ++d) {
        auto basis = monomials_of_weighted_degree(grading, d);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], i);
        IntMatrix a = monomial_ideal_slice(grading, twisted_gens, d, index);
        IntMatrix b = monomial_ideal_slice(grading, diagonal_gens, d, index);
        if (!hermite_slice_equal(a, b))
            return false;
    }
    return true;
}

std::pair<DiagonalPresentation, GradedTable> twisted_coinvariants(GroupKind kind,
                                                                  const Int& q,
                                                                  std::uint32_t cutoff) {
    FrobeniusTwist twist(q);
    std::vector<DiagonalGenerator> gens;
    for (std::uint32_t d : fundamental_degrees(kind))
        gens.push_back({"c" + std::to_string(d), d, twist.annihilator(d)});
    DiagonalPresentation p(std::move(gens));
    GradedTable t = graded_table(p, cutoff);
    return {std::move(p), std::move(t)};
}

namespace {

// Expanded generators of the full twisted ideal of a Levi: one polynomial
// (1 - q^w) e^m per monomial m in the abstract degree-(1..n) generators,
// with e^m evaluated through the block expansion.
std::vector<IntPolynomial> levi_twisted_generators(const std::vector<unsigned>& blocks,
                                                   const FrobeniusTwist& twist,
                                                   std::uint32_t cutoff) {
    unsigned n = 0;
    for (unsigned b : blocks)
        n += b;
    Grading c_grading;
    for (unsigned k = 1; k <= n; ++k)
        c_grading.push_back(k);
    std::vector<IntPolynomial> expansions;
    for (unsigned k = 1; k <= n; ++k)
        expansions.push_back(levi_elementary_expansion(k, blocks));

    Grading block_grading = levi_block_grading(blocks);
    std::vector<IntPolynomial> out;
    for (std::uint32_t w = 1; w <= cutoff; ++w) {
        for (const Monomial& m : monomials_of_weighted_degree(c_grading, w)) {
            IntPolynomial prod = IntPolynomial::constant(block_grading, 1);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (m[k] > 0)
                    prod = prod * expansions[k].pow(m[k]);
            out.push_back(prod * (Int(1) - twist.scale(w)));
        }
    }
    return out;
}

std::vector<IntPolynomial> levi_diagonal_generators(const std::vector<unsigned>& blocks,
                                                    const FrobeniusTwist& twist) {
    unsigned n = 0;
    for (unsigned b : blocks)
        n += b;
    std::vector<IntPolynomial> out;
    for (unsigned k = 1; k <= n; ++k)
        out.push_back(levi_elementary_expansion(k, blocks) * twist.annihilator(k));
    return out;
}

// Rows spanning the degree-d slice of the ideal generated by arbitrary
// homogeneous polynomials.
IntMatrix polynomial_ideal_slice(const Grading& grading,
                                 const std::vector<IntPolynomial>& generators,
                                 std::uint32_t d,
                                 const std::map<Monomial, std::size_t>& index) {
    IntMatrix rows(0, index.size());
    for (const auto& g : generators) {
        auto w = g.homogeneous_degree();
        if (!w)
            throw std::invalid_argument("ideal generator is not homogeneous");
        if (g.is_zero() || *w > d)
            continue;
        for (const Monomial& u : monomials_of_weighted_degree(grading, d - *w)) {
            IntPolynomial prod = IntPolynomial::monomial(grading, u, 1) * g;
            std::vector<Int> row(index.size(), 0);
            for (const auto& [m, c] : prod.terms())
                row[index.at(m)] = c;
            rows.append_row(row);
        }
    }
    return rows;
}

}  // namespace

bool verify_levi_ideal_reduction(const std::vector<unsigned>& blocks, const Int& q,
                                 std::uint32_t cutoff) {
    FrobeniusTwist twist(q);
    Grading grading = levi_block_grading(blocks);
    auto twisted_gens = levi_twisted_generators(blocks, twist, cutoff);
    auto diagonal_gens = levi_diagonal_generators(blocks, twist);
    for (std::uint32_t d = 1; d <= cutoff; ++d) {
        auto basis = monomials_of_weighted_degree(grading, d);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], i);
        IntMatrix a = polynomial_ideal_slice(grading, twisted_gens, d, index);
        IntMatrix b = polynomial_ideal_slice(grading, diagonal_gens, d, index);
        if (!hermite_slice_equal(a, b))
            return false;
    }
    return true;
}

GradedTable twisted_coinvariants_levi(const std::vector<unsigned>& blocks, const Int& q,
                                      std::uint32_t cutoff) {
    FrobeniusTwist twist(q);
    Grading grading = levi_block_grading(blocks);
    if (!verify_levi_ideal_reduction(blocks, q, cutoff))
        throw std::runtime_error("twisted ideal did not reduce to the expected generators");
    auto gens = levi_diagonal_generators(blocks, twist);
    GradedTable t;
    t.cutoff = cutoff;
    for (std::uint32_t d = 0; d <= cutoff; ++d)
        t.components.push_back(component_oracle(grading, gens, d));
    return t;
}

}  // namespace chowcalc
