#pragma once

#include "chowcalc/twisted.hpp"
#include "chowcalc/wreath.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chowcalc {

/// l-Sylow subgroup of GL_n(F_q) for odd l not dividing q, as a product of
/// iterated wreath towers: height i stands for Z/l applied i times on top of
/// Z/l^b.
struct SylowShape {
    Int l = 3;
    unsigned b = 1;
    std::vector<unsigned> towers;  // heights, ascending

    bool operator==(const SylowShape&) const = default;
};

struct ChevalleyQuery {
    GroupKind kind = GroupKind::gl(1);
    Int q = 2;
    std::uint32_t cutoff = 12;
    std::set<Int> inverted;
};

/// The integral Chow-ring presentation of BG(F_q-bar points of the finite
/// group scheme) and its per-degree table.  The inverted set must be empty.
std::pair<DiagonalPresentation, GradedTable> chow_BG(const ChevalleyQuery& query);

/// Localized presentation for queries with an inverted prime set.  The set
/// must contain what the comparison theorem requires for the group: for GL
/// and Sp the prime of q together with 2 unless q = 1 mod 4; for SL the
/// prime of q and every prime divisor of q - 1.  Larger sets produce
/// warnings, smaller sets are rejected.
std::pair<DiagonalPresentation, GradedTable> theorem_a(
    const ChevalleyQuery& query, std::vector<std::string>* warnings = nullptr);

/// Least r >= 1 with q^r = 1 mod l.
unsigned mult_order(const Int& q, const Int& l);

/// Largest e with l^e dividing m; m must be positive.
unsigned l_valuation(const Int& m, const Int& l);

SylowShape sylow_shape(unsigned n, const Int& q, const Int& l);

/// l-adic valuation of |GL_n(F_q)|: sum of the valuations of q^i - 1.
unsigned glq_l_part_order(unsigned n, const Int& q, const Int& l);

/// Exponent of l in the order of the shape's group: per tower of height i,
/// b * l^i for the base factors plus (l^i - 1)/(l - 1) for the cyclic tops.
unsigned shape_order_exponent(const SylowShape& shape);

/// Tower model tables combined over the product of towers; degrees 0..D-1.
GradedTable sylow_chow_model(const SylowShape& shape, std::uint32_t d);

/// Degreewise: the l-primary part of the GL_n table embeds in the Sylow
/// model (consequence of transfer along a prime-to-l index).
bool check_restriction_embedding(unsigned n, const Int& q, const Int& l, std::uint32_t d);

/// Mod-l reduction of the GL_n presentation is the polynomial ring on
/// c_r, c_2r, ..., c_mr, checked by survivor names and Hilbert function.
bool guillot_check(unsigned n, const Int& q, const Int& l, std::uint32_t d);

/// Characteristic-0 Chow ring of an a-fold product of mu_p: a degree-1
/// generators with annihilator p.  (In characteristic p the same group has
/// trivial Chow ring; this presentation is the char-0 side of that contrast.)
DiagonalPresentation elementary_abelian_char0(unsigned a, const Int& p);

}  // namespace chowcalc
