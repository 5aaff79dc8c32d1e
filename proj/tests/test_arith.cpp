#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qtl/arith.hpp"

using namespace qtl::arith;

namespace {

// Legendre symbol by quadratic-residue enumeration, for odd primes only.
int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares.count(a) ? 1 : -1;
}

}  // namespace

TEST_CASE("kronecker matches small examples") {
    for (std::int64_t m = -20; m <= 20; ++m) CHECK(kronecker(m, 1) == 1);
    CHECK(kronecker(8, 3) == -1);
    CHECK(kronecker(8, 3) == legendre_by_enumeration(8, 3));
    CHECK(kronecker(8 * 1, 7) == 1);
    // chi_8(n) = 1 iff n = +-1 mod 8: squares mod 8 are {0,1,4}, and 2 is a
    // QR mod p exactly when p = +-1 mod 8
    for (std::int64_t n = 1; n < 200; n += 2) {
        const int expected = (n % 8 == 1 || n % 8 == 7) ? 1 : -1;
        CHECK(kronecker(8, n) == expected);
    }
}

TEST_CASE("kronecker agrees with Legendre enumeration on odd primes") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t a = -30; a <= 30; ++a)
            CHECK(kronecker(a, p) == legendre_by_enumeration(a, p));
    }
}

TEST_CASE("kronecker special conventions") {
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(0, 3) == 0);
    CHECK(kronecker(5, -1) == 1);
    CHECK(kronecker(-5, -1) == -1);
    CHECK(kronecker(3, 2) == -1);   // 3 = 3 mod 8
    CHECK(kronecker(7, 2) == 1);    // 7 = -1 mod 8
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(15, -9) == 0);  // gcd > 1
}

TEST_CASE("kronecker multiplicativity in both arguments") {
    for (std::int64_t a = -60; a <= 60; ++a) {
        for (std::int64_t m = 1; m <= 60; ++m)
            for (std::int64_t n = 1; n <= 60; ++n)
                CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
    for (std::int64_t a = -60; a <= 60; ++a)
        for (std::int64_t b = -60; b <= 60; ++b)
            for (std::int64_t n = 1; n <= 60; ++n)
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
    // Negative bottoms: multiplicative for nonzero tops. (0*b|-1) = 1 differs
    // from (0|-1)(b|-1) = sgn(b) when b < 0, a known convention boundary.
    for (std::int64_t a = -60; a <= 60; ++a) {
        if (a == 0) continue;
        for (std::int64_t b = -60; b <= 60; ++b) {
            if (b == 0) continue;
            for (std::int64_t n = -60; n <= -1; ++n)
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        }
    }
    CHECK(kronecker(0, -1) == 1);
    CHECK(kronecker(0, -1) * kronecker(-5, -1) == -1);  // != kronecker(0 * -5, -1)
}

TEST_CASE("chi_8d: periodicity, zero locus, full-period sum") {
    const MobiusTable t = sieve_mobius(99);
    for (std::int64_t d = 1; d <= 99; d += 2) {
        if (t.at(d) == 0) continue;  // d square-free only
        const std::int64_t q = 8 * d;
        std::int64_t period_sum = 0;
        for (std::int64_t n = 1; n <= q; ++n) {
            const int chi = kronecker(q, n);
            CHECK(chi == kronecker(q, n + q));
            CHECK((chi == 0) == (std::gcd(q, n) > 1));
            period_sum += chi;
        }
        CHECK(period_sum == 0);  // nontrivial primitive character
    }
}

TEST_CASE("sieve_mobius basics") {
    CHECK_THROWS_AS(sieve_mobius(0), std::invalid_argument);
    CHECK(sieve_mobius(1).at(1) == 1);
    const MobiusTable t = sieve_mobius(10);
    CHECK(t.at(6) == 1);   // mu(2*3) = (-1)^2
    CHECK(t.at(8) == 0);   // 4 | 8
    CHECK(t.at(1) == 1);
    CHECK(t.at(2) == -1);
    CHECK(t.at(9) == 0);
    CHECK(t.at(10) == 1);
}

TEST_CASE("mobius invariants on a long range") {
    const MobiusTable t = sieve_mobius(100000);
    const auto primes = sieve_primes(100000);
    for (std::int64_t p : primes) CHECK(t.at(p) == -1);
    // mu(n) = 0 iff n has a squared prime factor; spot check densely
    for (std::int64_t n = 1; n <= 10000; ++n) {
        bool squarefull = false;
        for (std::int64_t p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) {
                squarefull = true;
                break;
            }
        CHECK((t.at(n) == 0) == squarefull);
        CHECK(t.at(n) * t.at(n) == std::abs(t.at(n)));  // mu^2 = |mu|
    }
}

TEST_CASE("mertens and twisted mertens") {
    const MobiusTable t = sieve_mobius(1000);
    CHECK(mertens(10, t) == -1);
    CHECK(mertens(1, t) == 1);
    CHECK(mertens_twisted(10, 1, t) == 2);  // 1 + 1 + 1 - 1 at n = 1,3,5,7
    for (std::int64_t d : {1, 3, 5, 7, 11}) CHECK(mertens_twisted(1, d, t) == 1);
    CHECK_THROWS_AS(mertens_twisted(2000, 1, t), std::invalid_argument);
    CHECK_THROWS_AS(mertens_twisted(10, 4, t), std::invalid_argument);
    CHECK_THROWS_AS(mertens_twisted(10, 9, t), std::invalid_argument);

    // direct summation cross-check
    for (std::int64_t d : {1, 3, 15}) {
        for (std::int64_t x : {1, 7, 50, 300}) {
            std::int64_t expected = 0;
            for (std::int64_t n = 1; n <= x; ++n) expected += t.at(n) * kronecker(8 * d, n);
            CHECK(mertens_twisted(x, d, t) == expected);
        }
    }
}

TEST_CASE("squarefree mobius identity") {
    CHECK(squarefree_mobius_identity_check(1));
    CHECK(squarefree_mobius_identity_check(12));
    CHECK(squarefree_mobius_identity_check(100000));
}

TEST_CASE("squarefree odd set") {
    const MobiusTable t = sieve_mobius(50);
    const auto s = SquarefreeOddSet::build(t);
    for (std::int64_t n = 1; n <= 50; ++n) {
        const bool expected = (n % 2 == 1) && t.at(n) != 0;
        CHECK(s.contains(n) == expected);
    }
}
