#pragma once

#include "chowcalc/numbers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chowcalc {

/// Exponent vector; length is the ambient generator count.  Lexicographic
/// comparison on exponents is the canonical monomial order throughout.
using Monomial = std::vector<std::uint32_t>;

/// Generator degrees d_i >= 1 of a weighted polynomial ring.
using Grading = std::vector<std::uint32_t>;

std::uint32_t weighted_degree(const Monomial& m, const Grading& grading);

/// All monomials of weighted degree exactly d, ascending lexicographic.
std::vector<Monomial> monomials_of_weighted_degree(const Grading& grading, std::uint32_t d);

/// Sparse multivariate polynomial over Z.  The grading is part of the value;
/// mixing polynomials from rings with different gradings is an error.
class IntPolynomial {
public:
    explicit IntPolynomial(Grading grading) : grading_(std::move(grading)) {}

    static IntPolynomial zero(const Grading& grading) { return IntPolynomial(grading); }
    static IntPolynomial constant(const Grading& grading, const Int& c);
    /// The i-th generator (0-based).
    static IntPolynomial generator(const Grading& grading, std::size_t i);
    static IntPolynomial monomial(const Grading& grading, Monomial m, const Int& c);

    const Grading& grading() const { return grading_; }
    std::size_t generator_count() const { return grading_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, const Int& c);

    IntPolynomial operator+(const IntPolynomial& g) const;
    IntPolynomial operator-(const IntPolynomial& g) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& g) const;
    IntPolynomial operator*(const Int& c) const;
    IntPolynomial pow(unsigned e) const;

    bool operator==(const IntPolynomial& other) const = default;

    /// Degree if every term has the same weighted degree (zero counts as
    /// homogeneous of any degree; reported as 0).
    std::optional<std::uint32_t> homogeneous_degree() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    Grading grading_;
    std::map<Monomial, Int> terms_;
};

/// Ring homomorphism sending generator i of f's ring to images[i]; all
/// images must live in one common target ring.
IntPolynomial substitute(const IntPolynomial& f, const std::vector<IntPolynomial>& images);

}  // namespace chowcalc
