#pragma once
// Sieved arithmetic functions and the general Kronecker symbol.
// Everything here is elementary number theory consumed by the other modules.

#include <cstdint>
#include <vector>

namespace qtl::arith {

// Kronecker symbol (a|n) for arbitrary integers, including n <= 0 and even n.
// Conventions: (a|1) = 1, (a|0) = 1 iff |a| = 1, (a|2) depends on a mod 8,
// (a|-1) = sign of a. Completely multiplicative in each argument (bottom
// multiplicativity requires nonzero factors). Returns 0 iff gcd(a, n) > 1.
int kronecker(std::int64_t a, std::int64_t n) noexcept;

// mu[n] for 1 <= n <= limit, one byte per entry. mu[0] is unused.
struct MobiusTable {
    std::int64_t limit = 0;
    std::vector<std::int8_t> mu;

    int at(std::int64_t n) const;  // bounds-checked
};

// Linear (smallest-prime-factor driven) sieve. Throws std::invalid_argument
// for limit = 0.
MobiusTable sieve_mobius(std::int64_t limit);

// All primes <= limit, ascending.
std::vector<std::int64_t> sieve_primes(std::int64_t limit);

// Indicator of { n <= limit : n odd and mu(n)^2 = 1 }.
struct SquarefreeOddSet {
    std::int64_t limit = 0;
    std::vector<bool> member;

    bool contains(std::int64_t n) const;
    static SquarefreeOddSet build(const MobiusTable& table);
};

// M(x) = sum_{n <= x} mu(n).
std::int64_t mertens(std::int64_t x, const MobiusTable& table);

// Twisted variant sum_{n <= x} mu(n) * (8d|n) for positive odd square-free d.
std::int64_t mertens_twisted(std::int64_t x, std::int64_t d, const MobiusTable& table);

// Verifies sum_{a^2 | n} mu(a) = mu(n)^2 for every n <= limit.
bool squarefree_mobius_identity_check(std::int64_t limit);

}  // namespace qtl::arith
