#pragma once

#include "chowcalc/presentations.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chowcalc {

/// Symbolic name of a basis class: an atom, a tensor of an orbit of classes,
/// or a gamma / alpha class built on one source class.
struct Label {
    enum class Kind { Atom, Tensor, Gamma, Alpha };

    Kind kind = Kind::Atom;
    std::string atom;            // Atom only
    std::vector<Label> children; // Tensor: orbit members; Gamma/Alpha: one child
    std::uint32_t shift = 0;     // Alpha only

    static Label make_atom(std::string name);
    static Label make_tensor(std::vector<Label> members);
    static Label make_gamma(Label source);
    static Label make_alpha(Label source, std::uint32_t shift);

    bool operator==(const Label&) const = default;
    std::string to_string() const;  // "x", "[x,y]", "g(x)", "a3(x)"
};

struct BasedElement {
    Label label;
    std::uint32_t degree = 0;  // dimension or codimension, per basis mode
    Int order = 0;             // 0 or a prime power

    bool operator==(const BasedElement&) const = default;
};

enum class GradingMode { Dimension, Codimension };

/// A based graded abelian group: one homogeneous generator per element.
/// In codimension mode the degrees are codimensions bounded by the cutoff.
struct WreathBasis {
    std::vector<BasedElement> elements;
    GradingMode mode = GradingMode::Dimension;
    std::uint32_t cutoff = 0;  // codimension mode only

    void validate() const;  // label uniqueness, order shape, cutoff bound
};

/// Indices of elements with positive degree and order 0 or a power of l.
std::vector<std::size_t> r_set(const WreathBasis& b, const Int& l);

/// Orbits of the cyclic rotation action on {0..n-1}^l, minus the diagonal
/// tuples of excluded indices.  Each orbit is reported once, by its
/// lexicographically least rotation, in ascending order.
std::vector<std::vector<std::size_t>> cyclic_orbits(std::size_t n, unsigned l,
                                                    const std::vector<std::size_t>& excluded_diagonal);

/// The wreath-product decomposition of a dimension-graded basis: tensor
/// classes over rotation orbits, plus gamma and alpha classes for sources
/// whose order is 0 or a power of l.  Order-1 summands are dropped; the
/// number dropped is reported through suppressed_rank_one when non-null.
WreathBasis f_l(const WreathBasis& b, const Int& l,
                std::size_t* suppressed_rank_one = nullptr);

/// Order bookkeeping of the decomposition: l * gamma generates a subgroup of
/// the order of the diagonal tensor class, and the rank-2 correction count
/// equals the non-diagonal orbit count (2^l - 2)/l.
bool check_gamma_relations(const WreathBasis& b, const Int& l);

/// f_l on a codimension-graded basis: reinterpret codimension c as dimension
/// n_stab - c, decompose, convert back, truncate at the cutoff, and rewrite
/// classes built on the unit as the unit and powers of the degree-1 class t.
/// The result does not depend on n_stab >= cutoff.
WreathBasis stable_f_l(const WreathBasis& b, const Int& l, std::uint32_t n_stab);

/// Orders per codimension of a codimension-graded basis; cutoff - 1 is the
/// last reported degree.
GradedTable basis_to_table(const WreathBasis& b);

/// Codimension basis of Z[t]/(l^b t) truncated at the cutoff.
WreathBasis truncated_polynomial_basis(const Int& l, unsigned b, std::uint32_t cutoff);

/// stable_f_l applied height times to the Z[t]/(l^b t) basis.
GradedTable iterate_tower(const Int& l, unsigned b, unsigned height, std::uint32_t cutoff);

/// Degreewise tensor product of graded tables up to degree d_max, without
/// Tor correction terms.
GradedTable kunneth_tensor(const GradedTable& a, const GradedTable& b, std::uint32_t d_max);

}  // namespace chowcalc
