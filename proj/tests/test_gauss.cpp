#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qtl/gauss.hpp"

using namespace qtl::gauss;

TEST_CASE("gauss_direct small values") {
    CHECK(gauss_direct({1, 1}).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gauss_direct({1, 3}).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(gauss_direct({0, 9}).real() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(std::abs(gauss_direct({5, 45}).imag()) < 1e-8 * 45);
}

TEST_CASE("gauss_direct argument guards") {
    CHECK_THROWS_AS(gauss_direct({1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(gauss_direct({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gauss_direct({1, -3}), std::invalid_argument);
    CHECK_THROWS_AS(gauss_direct({1, kDirectSumLimit + 1}), std::length_error);
    CHECK_THROWS_AS(gauss_fast({1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(gauss_fast({1, 0}), std::invalid_argument);
}

TEST_CASE("gauss_fast prime power cases") {
    CHECK(gauss_fast({1, 9}) == GaussValue{0, 1});    // b >= a+2
    CHECK(gauss_fast({3, 9}) == GaussValue{-3, 1});   // b = a+1 even
    CHECK(gauss_fast({1, 3}) == GaussValue{1, 3});    // b = a+1 odd
    CHECK(gauss_fast({3, 3}) == GaussValue{0, 1});    // b <= a odd
    CHECK(gauss_fast({9, 9}) == GaussValue{6, 1});    // b <= a even: phi(9)
    CHECK(gauss_fast({0, 9}) == GaussValue{6, 1});    // a = infinity
    CHECK(gauss_fast({0, 3}) == GaussValue{0, 1});
    CHECK(gauss_fast({1, 15}) == GaussValue{1, 15});  // (1|3)(1|5) sqrt(15)
    CHECK(gauss_fast({1, 1}) == GaussValue{1, 1});
}

TEST_CASE("gauss oracle equivalence on a unit-size grid") {
    for (std::int64_t k = 1; k <= 199; k += 2) {
        for (std::int64_t m = -15; m <= 15; ++m) {
            const auto direct = gauss_direct({m, k});
            const double fast = gauss_fast({m, k}).to_double();
            CHECK(std::abs(direct.real() - fast) < 1e-6 * static_cast<double>(std::max<std::int64_t>(1, k)));
            CHECK(std::abs(direct.imag()) < 1e-8 * static_cast<double>(k));
        }
    }
}

TEST_CASE("gauss_fast multiplicativity is exact") {
    for (std::int64_t m = -30; m <= 30; ++m) {
        for (std::int64_t k1 = 1; k1 <= 45; k1 += 2) {
            for (std::int64_t k2 = 1; k2 <= 45; k2 += 2) {
                if (std::gcd(k1, k2) != 1) continue;
                CHECK(gauss_fast({m, k1 * k2}) == mul(gauss_fast({m, k1}), gauss_fast({m, k2})));
            }
        }
    }
}

TEST_CASE("GaussValue multiplication canonicalizes the radical") {
    CHECK(mul({2, 6}, {3, 10}) == GaussValue{12, 15});  // gcd(6,10)=2
    CHECK(mul({1, 3}, {1, 3}) == GaussValue{3, 1});
    CHECK(mul({0, 1}, {7, 5}) == GaussValue{0, 1});
    CHECK(mul({-2, 7}, {5, 7}) == GaussValue{-70, 1});
    CHECK_THROWS_AS(mul({INT64_MAX / 2, 3}, {4, 5}), std::overflow_error);
}

TEST_CASE("GaussValue to_double") {
    CHECK(GaussValue{-3, 1}.to_double() == -3.0);
    CHECK(GaussValue{1, 15}.to_double() == doctest::Approx(std::sqrt(15.0)).epsilon(1e-15));
}
