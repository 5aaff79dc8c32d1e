#pragma once
// Gauss-type character sums G_m(k) for odd k >= 1:
//
//   G_m(k) = ((1-i)/2 + (-1|k)(1+i)/2) * sum_{a mod k} (a|k) e(am/k)
//
// gauss_direct evaluates the literal complex sum; gauss_fast factors k and
// applies the exact prime-power case table, so values stay in the closed
// form q*sqrt(s) with s square-free.

#include <complex>
#include <cstdint>

namespace qtl::gauss {

// Exact algebraic value q*sqrt(s). Canonical: s square-free positive,
// and s = 1 whenever q = 0.
struct GaussValue {
    std::int64_t q = 0;
    std::int64_t s = 1;

    double to_double() const;
    friend bool operator==(const GaussValue&, const GaussValue&) = default;
};

// (q1 sqrt(s1))(q2 sqrt(s2)) = q1 q2 g * sqrt(s1 s2 / g^2), g = gcd(s1, s2).
// 128-bit intermediates; throws std::overflow_error instead of wrapping.
GaussValue mul(const GaussValue& x, const GaussValue& y);

struct GaussQuery {
    std::int64_t m = 0;  // any integer, zero allowed
    std::int64_t k = 1;  // odd, >= 1
};

// Guard for the O(k) direct summation.
inline constexpr std::int64_t kDirectSumLimit = 1'000'000;

std::complex<double> gauss_direct(const GaussQuery& query);
GaussValue gauss_fast(const GaussQuery& query);

}  // namespace qtl::gauss
