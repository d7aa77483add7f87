#pragma once

#include "chowcalc/invariants.hpp"
#include "chowcalc/presentations.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace chowcalc {

/// Frobenius-type twist: acts on a homogeneous element of degree d as
/// multiplication by q^d.  Other multiplicative twists would slot in here.
class FrobeniusTwist {
public:
    explicit FrobeniusTwist(Int q);  // q must be a prime power >= 2

    const Int& q() const { return q_; }
    Int scale(std::uint32_t degree) const;        // q^degree
    Int annihilator(std::uint32_t degree) const;  // q^degree - 1

private:
    Int q_;
};

/// Annihilators (q^{d_i} - 1) attached to generators of the given degrees.
std::vector<Int> twist_ideal_generators(const std::vector<std::uint32_t>& degrees,
                                        const Int& q);

/// Checks degree by degree (d <= cutoff) that the ideal generated by
/// {(1 - q^{deg m}) m : m a monomial in the fundamental invariants} has the
/// same slices as the ideal generated by {(q^{d_i} - 1) f_i}, via canonical
/// Hermite forms of the slice lattices.
bool verify_ideal_reduction(GroupKind kind, const Int& q, std::uint32_t cutoff);

/// The coinvariant presentation Z[c_{d_1},...]/((q^{d_1}-1)c_{d_1},...) and
/// its per-degree table up to the cutoff.
std::pair<DiagonalPresentation, GradedTable> twisted_coinvariants(GroupKind kind,
                                                                  const Int& q,
                                                                  std::uint32_t cutoff);

/// Same slice comparison as verify_ideal_reduction, but in the block-generator
/// ring of a Levi subgroup of GL_n: monomials in the expanded e_1..e_n versus
/// the generators {(q^k - 1) e_k expanded}.
bool verify_levi_ideal_reduction(const std::vector<unsigned>& blocks, const Int& q,
                                 std::uint32_t cutoff);

/// Per-degree structure of the twisted coinvariants of a block Levi subgroup
/// of GL_n, computed by relation-matrix cokernels in the block-generator ring
/// after certifying the ideal reduction up to the cutoff.
GradedTable twisted_coinvariants_levi(const std::vector<unsigned>& blocks, const Int& q,
                                      std::uint32_t cutoff);

}  // namespace chowcalc
