#pragma once

#include "chowcalc/numbers.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace chowcalc {

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0))
    {
    }
    /// Row-major initializer; entries.size() must equal rows*cols.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    void append_row(const std::vector<Int>& row);
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Finitely generated abelian group in invariant factor normal form.
///
/// factors() is the canonical list: no entry equals 1, the nonzero entries
/// form a divisibility chain d1 | d2 | ..., and zeros (infinite cyclic
/// summands) come last.  The empty list is the trivial group.  Any list of
/// nonnegative orders is normalized on construction, so equality of values
/// is equality of isomorphism classes.
class AbelianGroupType {
public:
    AbelianGroupType() = default;
    explicit AbelianGroupType(std::vector<Int> orders);

    const std::vector<Int>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }
    /// Number of infinite cyclic summands.
    std::size_t rank() const;

    bool operator==(const AbelianGroupType& other) const = default;

    /// "0" for the trivial group, otherwise e.g. "Z/2 + Z/8 + Z".
    std::string to_string() const;

private:
    std::vector<Int> factors_;
};

/// Diagonal of the Smith normal form of m: d1 | d2 | ... | dk with
/// k = min(rows, cols), all entries nonnegative.
std::vector<Int> smith_normal_form(const IntMatrix& m);

/// Z^generator_count modulo the row span of relations.
AbelianGroupType cokernel(std::size_t generator_count, const IntMatrix& relations);

/// Canonical row Hermite normal form: positive pivots, entries above a pivot
/// reduced into [0, pivot), zero rows removed.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// True iff the integer row spans of a and b coincide.
bool hermite_slice_equal(const IntMatrix& a, const IntMatrix& b);

AbelianGroupType direct_sum(const AbelianGroupType& a, const AbelianGroupType& b);

/// Summand-wise tensor product: Z/a (x) Z/b = Z/gcd(a,b), gcd(0,b) = b.
AbelianGroupType tensor_product(const AbelianGroupType& a, const AbelianGroupType& b);

/// Summand-wise Tor_1: Z/gcd(a,b) for a,b > 0, zero if either summand is Z.
AbelianGroupType tor_product(const AbelianGroupType& a, const AbelianGroupType& b);

/// Invert the primes in s: each finite factor loses its s-parts.
AbelianGroupType localize(const AbelianGroupType& a, const std::set<Int>& s);

/// Keep only the l-primary part of every finite factor.
AbelianGroupType l_primary_part(const AbelianGroupType& a, const Int& l);

/// True iff the finite l-group a embeds into the l-localization of b
/// (0-factors of b absorb any finite l-group).  a must be finite.
bool embeds(const AbelianGroupType& a, const AbelianGroupType& b, const Int& l);

}  // namespace chowcalc
