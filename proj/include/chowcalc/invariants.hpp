#pragma once

#include "chowcalc/polyring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chowcalc {

/// GL(n), SL(n) or Sp(2m), carrying the size parameter (m for Sp).
class GroupKind {
public:
    enum class Family { GL, SL, Sp };

    static GroupKind gl(unsigned n);         // n >= 1
    static GroupKind sl(unsigned n);         // n >= 2
    static GroupKind sp_from_m(unsigned m);  // Sp(2m), m >= 1

    Family family() const { return family_; }
    /// n for GL/SL, m for Sp; also the torus variable count.
    unsigned rank() const { return size_; }
    std::string display() const;  // "GL(3)", "SL(3)", "Sp(4)"

    bool operator==(const GroupKind&) const = default;

private:
    GroupKind(Family f, unsigned s) : family_(f), size_(s) {}
    Family family_;
    unsigned size_;
};

/// One substitution per torus variable; applying all of them fixes exactly
/// the invariant ring's elements (the substitutions generate the Weyl group).
struct WeylData {
    GroupKind kind;
    unsigned rank;
    std::vector<std::uint32_t> fundamental_degrees;
    std::vector<std::vector<IntPolynomial>> action_generators;
};

WeylData weyl_data(GroupKind kind);

/// GL(n) -> (1..n); Sp(2m) -> (2,4,..,2m); SL(n) -> (2..n).
std::vector<std::uint32_t> fundamental_degrees(GroupKind kind);

/// e_k of the listed variables (by index) in the given ambient ring.
IntPolynomial elementary_symmetric(const Grading& grading,
                                   const std::vector<std::size_t>& vars, unsigned k);

/// The i-th fundamental invariant in torus variables, indexed by elementary
/// symmetric subscript: GL: e_i(x), i in 1..n; Sp: e_i(x^2), i in 1..m;
/// SL: e_i(x), i in 2..n (e_1 is adjoined to ideals instead, see callers).
IntPolynomial invariant_generator(GroupKind kind, unsigned i);

bool check_invariance(const IntPolynomial& f, const WeylData& w);

/// e_k of all variables of a block-diagonal torus, written in the ring on
/// block generators e_j^(b) (degree j), as the sum over compositions of k
/// of products of one e_{k_b}^(b) per block.
IntPolynomial levi_elementary_expansion(unsigned k,
                                        const std::vector<unsigned>& blocks);

/// Grading of the block-generator ring used by levi_elementary_expansion:
/// degrees (1..n_1, 1..n_2, ...) block by block.
Grading levi_block_grading(const std::vector<unsigned>& blocks);

}  // namespace chowcalc
