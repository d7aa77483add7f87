#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowcalc/polyring.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace chowcalc;

namespace {

// --- independent oracle: monomial counts from the Hilbert series ---
// Coefficient of t^d in prod_i 1/(1 - t^{d_i}), expanded as a truncated
// power series.  Uses nothing from the enumeration under test.

std::vector<long> hilbert_series_coeffs(const Grading& grading, std::uint32_t max_d)
{
    std::vector<long> coeffs(max_d + 1, 0);
    coeffs[0] = 1;
    for (std::uint32_t di : grading) {
        // multiply by 1/(1 - t^di): c'[d] = c[d] + c'[d - di]
        for (std::uint32_t d = di; d <= max_d; ++d)
            coeffs[d] += coeffs[d - di];
    }
    return coeffs;
}

IntPolynomial random_poly(const Grading& grading, std::mt19937& rng)
{
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    IntPolynomial f(grading);
    int k = term_count(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(grading.size());
        for (auto& e : m)
            e = static_cast<std::uint32_t>(expo(rng));
        f.add_term(m, coeff(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("weighted degree") {
    Grading g12{1, 2};
    CHECK(weighted_degree({2, 1}, g12) == 4);
    CHECK(weighted_degree({0, 0}, g12) == 0);
    CHECK(weighted_degree({0, 3}, {2, 4}) == 12);
    CHECK_THROWS_AS(weighted_degree({1}, g12), std::invalid_argument);
}

TEST_CASE("degree slice enumeration") {
    SUBCASE("grading (1,2), d=2") {
        auto ms = monomials_of_weighted_degree({1, 2}, 2);
        REQUIRE(ms.size() == 2);
        CHECK(ms[0] == Monomial{0, 1});
        CHECK(ms[1] == Monomial{2, 0});
    }
    SUBCASE("grading (2,4), d=3 is empty by parity") {
        CHECK(monomials_of_weighted_degree({2, 4}, 3).empty());
    }
    SUBCASE("grading (1,2,3), d=4") {
        auto ms = monomials_of_weighted_degree({1, 2, 3}, 4);
        std::vector<Monomial> expected{{0, 2, 0}, {1, 0, 1}, {2, 1, 0}, {4, 0, 0}};
        CHECK(ms == expected);
    }
    SUBCASE("d=0 gives the empty monomial only") {
        auto ms = monomials_of_weighted_degree({1, 2}, 0);
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == Monomial{0, 0});
    }
    SUBCASE("zero-degree generator rejected") {
        CHECK_THROWS_AS(monomials_of_weighted_degree({1, 0}, 2), std::invalid_argument);
    }
}

TEST_CASE("slice sizes match the Hilbert series") {
    std::vector<Grading> gradings{
        {1}, {1, 2}, {2, 4}, {1, 2, 3}, {1, 1, 2, 3}, {2, 4, 6, 8}, {3, 5}};
    for (const auto& g : gradings) {
        auto coeffs = hilbert_series_coeffs(g, 20);
        for (std::uint32_t d = 0; d <= 20; ++d) {
            auto ms = monomials_of_weighted_degree(g, d);
            CHECK(static_cast<long>(ms.size()) == coeffs[d]);
            // ascending lex, no repeats
            CHECK(std::is_sorted(ms.begin(), ms.end()));
            CHECK(std::set<Monomial>(ms.begin(), ms.end()).size() == ms.size());
            for (const auto& m : ms)
                CHECK(weighted_degree(m, g) == d);
        }
    }
}

TEST_CASE("ring arithmetic") {
    Grading g{1, 1};
    auto x = IntPolynomial::generator(g, 0);
    auto y = IntPolynomial::generator(g, 1);

    SUBCASE("difference of squares") {
        auto lhs = (x + y) * (x - y);
        auto rhs = x * x - y * y;
        CHECK(lhs == rhs);
    }
    SUBCASE("additive inverse") {
        auto f = x * x + y * IntPolynomial::constant(g, 3);
        CHECK((f + (-f)).is_zero());
    }
    SUBCASE("binomial square") {
        auto lhs = (x + y).pow(2);
        auto rhs = x * x + x * y * Int(2) + y * y;
        CHECK(lhs == rhs);
    }
    SUBCASE("grading mismatch rejected") {
        auto z = IntPolynomial::generator({1, 2}, 0);
        CHECK_THROWS_AS((void)(x + z), std::invalid_argument);
        CHECK_THROWS_AS((void)(x * z), std::invalid_argument);
    }
    SUBCASE("zero coefficient terms vanish") {
        IntPolynomial f(g);
        f.add_term({1, 0}, 2);
        f.add_term({1, 0}, -2);
        CHECK(f.is_zero());
        CHECK((x * Int(0)).is_zero());
    }
}

TEST_CASE("distributivity and commutativity on random polynomials") {
    std::mt19937 rng(20240817);
    Grading g{1, 2, 3};
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_poly(g, rng);
        auto h = random_poly(g, rng);
        auto k = random_poly(g, rng);
        CHECK(f * (h + k) == f * h + f * k);
        CHECK(f * h == h * f);
        CHECK((f * h) * k == f * (h * k));
    }
}

TEST_CASE("homogeneous degree") {
    Grading g{1, 2};
    auto x = IntPolynomial::generator(g, 0);
    auto c = IntPolynomial::generator(g, 1);
    CHECK(IntPolynomial::zero(g).homogeneous_degree() == 0u);
    CHECK((x * x + c).homogeneous_degree() == 2u);
    CHECK_FALSE((x + c).homogeneous_degree().has_value());
}

TEST_CASE("substitution") {
    Grading g{1, 1};
    auto x = IntPolynomial::generator(g, 0);
    auto y = IntPolynomial::generator(g, 1);

    SUBCASE("swap fixes symmetric polynomials") {
        auto f = x * x + y * y;
        CHECK(substitute(f, {y, x}) == f);
    }
    SUBCASE("sign flip on one variable") {
        auto f = x * y;
        CHECK(substitute(f, {-x, y}) == -(x * y));
    }
    SUBCASE("collapse y to x") {
        auto f = x * y;
        CHECK(substitute(f, {x, x}) == x * x);
    }
    SUBCASE("image count mismatch rejected") {
        CHECK_THROWS_AS(substitute(x, {x, y, y}), std::invalid_argument);
    }
    SUBCASE("target ring may differ from source ring") {
        Grading target{1, 1, 1};
        auto u = IntPolynomial::generator(target, 0);
        auto v = IntPolynomial::generator(target, 1);
        auto w = IntPolynomial::generator(target, 2);
        auto f = x * y + x;
        auto result = substitute(f, {u + v, w});
        CHECK(result == (u + v) * w + u + v);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(991);
    Grading src{1, 1, 2};
    Grading dst{1, 1};
    auto u = IntPolynomial::generator(dst, 0);
    auto v = IntPolynomial::generator(dst, 1);
    std::vector<IntPolynomial> images{u + v, u * v, v * v - u};
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_poly(src, rng);
        auto h = random_poly(src, rng);
        CHECK(substitute(f + h, images) == substitute(f, images) + substitute(h, images));
        CHECK(substitute(f * h, images) == substitute(f, images) * substitute(h, images));
    }
}

TEST_CASE("printing") {
    Grading g{1, 2};
    auto x = IntPolynomial::generator(g, 0);
    auto c = IntPolynomial::generator(g, 1);
    CHECK(IntPolynomial::zero(g).to_string({"x", "c"}) == "0");
    CHECK((x * x - c * Int(2)).to_string({"x", "c"}) == "-2*c + x^2");
    CHECK((x.pow(3) * Int(4) + IntPolynomial::constant(g, 1)).to_string({"x", "c"}) ==
          "1 + 4*x^3");
}
