#include "qtl/arith.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace qtl::arith {

int kronecker(std::int64_t a, std::int64_t n) noexcept {
    assert(a != INT64_MIN && n != INT64_MIN);
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;

    // Pull the 2-part out of n; (a|2) is +1 for a = ±1 mod 8, -1 for ±3 mod 8.
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    int k = 1;
    if (v & 1) {
        int r = static_cast<int>(a & 7);  // two's complement AND = mod 8
        if (r == 3 || r == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n is now odd and positive: binary Jacobi loop with reciprocity flips.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int r = static_cast<int>(n & 7);
            if (r == 3 || r == 5) k = -k;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) k = -k;
        a %= n;
    }
    return (n == 1) ? k : 0;
}

int MobiusTable::at(std::int64_t n) const {
    if (n < 1 || n > limit) throw std::invalid_argument("MobiusTable::at: index out of range");
    return mu[static_cast<std::size_t>(n)];
}

MobiusTable sieve_mobius(std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("sieve_mobius: limit must be positive");
    MobiusTable t;
    t.limit = limit;
    t.mu.assign(static_cast<std::size_t>(limit) + 1, 0);
    t.mu[1] = 1;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            t.mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (p > limit / i) break;
            composite[static_cast<std::size_t>(p * i)] = true;
            if (i % p == 0) {
                t.mu[static_cast<std::size_t>(p * i)] = 0;
                break;
            }
            t.mu[static_cast<std::size_t>(p * i)] = static_cast<std::int8_t>(-t.mu[static_cast<std::size_t>(i)]);
        }
    }
    return t;
}

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i * i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    for (std::int64_t i = 2; i <= limit; ++i)
        if (!composite[static_cast<std::size_t>(i)]) primes.push_back(i);
    return primes;
}

bool SquarefreeOddSet::contains(std::int64_t n) const {
    if (n < 1 || n > limit) throw std::invalid_argument("SquarefreeOddSet::contains: out of range");
    return member[static_cast<std::size_t>(n)];
}

SquarefreeOddSet SquarefreeOddSet::build(const MobiusTable& table) {
    SquarefreeOddSet s;
    s.limit = table.limit;
    s.member.assign(static_cast<std::size_t>(table.limit) + 1, false);
    for (std::int64_t n = 1; n <= table.limit; n += 2)
        s.member[static_cast<std::size_t>(n)] = table.mu[static_cast<std::size_t>(n)] != 0;
    return s;
}

std::int64_t mertens(std::int64_t x, const MobiusTable& table) {
    if (x < 1) throw std::invalid_argument("mertens: x must be positive");
    if (table.limit < x) throw std::invalid_argument("mertens: table too small");
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= x; ++n) s += table.mu[static_cast<std::size_t>(n)];
    return s;
}

std::int64_t mertens_twisted(std::int64_t x, std::int64_t d, const MobiusTable& table) {
    if (x < 1) throw std::invalid_argument("mertens_twisted: x must be positive");
    if (table.limit < x) throw std::invalid_argument("mertens_twisted: table too small");
    if (d < 1 || (d & 1) == 0) throw std::invalid_argument("mertens_twisted: d must be positive and odd");
    if (d <= table.limit && table.mu[static_cast<std::size_t>(d)] == 0)
        throw std::invalid_argument("mertens_twisted: d must be square-free");
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= x; ++n) {
        int m = table.mu[static_cast<std::size_t>(n)];
        if (m == 0) continue;
        s += m * kronecker(8 * d, n);
    }
    return s;
}

bool squarefree_mobius_identity_check(std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("squarefree_mobius_identity_check: limit must be positive");
    MobiusTable t = sieve_mobius(limit);
    std::vector<std::int32_t> acc(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t a = 1; a * a <= limit; ++a) {
        int m = t.mu[static_cast<std::size_t>(a)];
        if (m == 0) continue;
        for (std::int64_t n = a * a; n <= limit; n += a * a) acc[static_cast<std::size_t>(n)] += m;
    }
    for (std::int64_t n = 1; n <= limit; ++n) {
        int m = t.mu[static_cast<std::size_t>(n)];
        if (acc[static_cast<std::size_t>(n)] != m * m) return false;
    }
    return true;
}

}  // namespace qtl::arith
