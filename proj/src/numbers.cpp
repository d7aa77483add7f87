#include "chowcalc/numbers.hpp"

#include <stdexcept>

namespace chowcalc {

bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

unsigned valuation(const Int& m, const Int& l)
{
    if (m == 0)
        throw std::invalid_argument("valuation: m must be nonzero");
    if (l < 2)
        throw std::invalid_argument("valuation: l must be >= 2");
    Int r = abs(m);
    unsigned e = 0;
    while (r % l == 0) {
        r /= l;
        ++e;
    }
    return e;
}

std::optional<std::pair<Int, unsigned>> prime_power_base(const Int& n)
{
    if (n < 2)
        return std::nullopt;
    // Strip the smallest prime factor; n is a prime power iff nothing is left.
    Int p = 2;
    while (p * p <= n) {
        if (n % p == 0)
            break;
        p += (p == 2) ? 1 : 2;
    }
    if (p * p > n)
        return std::make_pair(n, 1u);  // n itself is prime
    unsigned e = valuation(n, p);
    if (pow_int(p, e) != n)
        return std::nullopt;
    return std::make_pair(p, e);
}

Int pow_int(const Int& q, unsigned e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
    return r;
}

}  // namespace chowcalc
