#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>

namespace chowcalc {

using Int = mpz_class;

/// Deterministic for small inputs, Baillie-PSW + Miller-Rabin beyond.
bool is_prime(const Int& n);

/// Largest e with l^e | m.  Requires m != 0 and l >= 2.
unsigned valuation(const Int& m, const Int& l);

/// If n = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<Int, unsigned>> prime_power_base(const Int& n);

/// q^e for e >= 0.
Int pow_int(const Int& q, unsigned e);

}  // namespace chowcalc
