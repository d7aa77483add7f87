#pragma once

#include "chowcalc/abelian.hpp"
#include "chowcalc/polyring.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace chowcalc {

struct DiagonalGenerator {
    std::string name;
    std::uint32_t degree = 1;  // positive
    Int annihilator = 0;       // 0 means no torsion relation

    bool operator==(const DiagonalGenerator&) const = default;
};

/// Z[g_1,...,g_r]/(m_1 g_1,...,m_r g_r) with deg g_i = d_i.
class DiagonalPresentation {
public:
    DiagonalPresentation() = default;
    explicit DiagonalPresentation(std::vector<DiagonalGenerator> generators);

    const std::vector<DiagonalGenerator>& generators() const { return generators_; }
    Grading grading() const;
    std::vector<std::string> names() const;

    bool operator==(const DiagonalPresentation&) const = default;

private:
    std::vector<DiagonalGenerator> generators_;
};

/// Per-degree group structure of a graded ring up to a cutoff.
struct GradedTable {
    std::uint32_t cutoff = 0;
    std::vector<AbelianGroupType> components;  // index = degree, size = cutoff + 1

    const AbelianGroupType& at(std::uint32_t d) const { return components.at(d); }
    bool operator==(const GradedTable&) const = default;
};

/// Degree-d part of the quotient: one summand Z/g per degree-d monomial,
/// g = gcd of the annihilators met by the monomial (gcd with 0 keeps the
/// other argument; all annihilators 0 gives a Z summand).
AbelianGroupType component_closed_form(const DiagonalPresentation& p, std::uint32_t d);

GradedTable graded_table(const DiagonalPresentation& p, std::uint32_t cutoff);

/// Brute force: cokernel of the relation rows spanning the degree-d slice of
/// the ideal, written in the monomial basis of the free ring.
AbelianGroupType component_oracle(const Grading& grading,
                                  const std::vector<IntPolynomial>& ideal_generators,
                                  std::uint32_t d);

/// Generators surviving in R tensor Z/l as free polynomial generators; a
/// generator dies iff its annihilator is a unit mod l.
std::vector<std::string> reduce_mod_l(const DiagonalPresentation& p, const Int& l);

/// Z/l-dimension of the degree-d slice of R tensor Z/l.
std::uint64_t hilbert_mod_l(const DiagonalPresentation& p, const Int& l, std::uint32_t d);

/// Divides S-parts out of every annihilator and drops generators whose
/// annihilator ends up 1 (including generators that started at 1).
DiagonalPresentation localize_presentation(const DiagonalPresentation& p,
                                           const std::set<Int>& s);

}  // namespace chowcalc
