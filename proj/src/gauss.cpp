#include "qtl/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qtl/arith.hpp"

namespace qtl::gauss {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("GaussValue: product overflows 64 bits");
    return static_cast<std::int64_t>(p);
}

void require_odd_positive(std::int64_t k) {
    if (k < 1 || (k & 1) == 0) throw std::invalid_argument("Gauss sum: k must be odd and >= 1");
}

}  // namespace

double GaussValue::to_double() const {
    return static_cast<double>(q) * std::sqrt(static_cast<double>(s));
}

GaussValue mul(const GaussValue& x, const GaussValue& y) {
    if (x.q == 0 || y.q == 0) return GaussValue{0, 1};
    std::int64_t g = std::gcd(x.s, y.s);
    GaussValue r;
    r.q = checked_mul(checked_mul(x.q, y.q), g);
    r.s = checked_mul(x.s / g, y.s / g);
    return r;
}

std::complex<double> gauss_direct(const GaussQuery& query) {
    require_odd_positive(query.k);
    if (query.k > kDirectSumLimit) throw std::length_error("gauss_direct: k exceeds the summation guard");
    const std::int64_t k = query.k;
    const std::int64_t m_red = ((query.m % k) + k) % k;
    const double two_pi_over_k = 2.0 * std::numbers::pi / static_cast<double>(k);
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t a = 0; a < k; ++a) {
        int chi = arith::kronecker(a, k);
        if (chi == 0) continue;
        std::int64_t r = (a * m_red) % k;  // k <= 1e6 so a*m_red < 2^62
        double ang = two_pi_over_k * static_cast<double>(r);
        sum += static_cast<double>(chi) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    // prefactor: 1 when k = 1 mod 4, -i when k = 3 mod 4
    if (arith::kronecker(-1, k) == 1) return sum;
    return std::complex<double>(0.0, -1.0) * sum;
}

GaussValue gauss_fast(const GaussQuery& query) {
    require_odd_positive(query.k);
    std::int64_t k = query.k;
    const std::int64_t m = query.m;
    GaussValue result{1, 1};

    auto apply_prime_power = [&](std::int64_t p, int b) -> GaussValue {
        // a = v_p(m), infinite for m = 0
        bool a_infinite = (m == 0);
        int a = 0;
        std::int64_t m_over_pa = m;
        if (!a_infinite) {
            while (m_over_pa % p == 0) {
                m_over_pa /= p;
                ++a;
            }
        }
        if (a_infinite || b <= a) {
            if (b & 1) return GaussValue{0, 1};
            std::int64_t pb1 = 1;
            for (int i = 0; i < b - 1; ++i) pb1 = checked_mul(pb1, p);
            return GaussValue{checked_mul(pb1, p - 1), 1};  // phi(p^b)
        }
        if (b == a + 1) {
            std::int64_t pa = 1;
            for (int i = 0; i < a; ++i) pa = checked_mul(pa, p);
            if ((b & 1) == 0) return GaussValue{-pa, 1};
            int sign = arith::kronecker(m_over_pa, p);
            return GaussValue{sign * pa, p};
        }
        return GaussValue{0, 1};  // b >= a + 2
    };

    for (std::int64_t p = 3; p * p <= k; p += 2) {
        if (k % p != 0) continue;
        int b = 0;
        while (k % p == 0) {
            k /= p;
            ++b;
        }
        GaussValue f = apply_prime_power(p, b);
        if (f.q == 0) return GaussValue{0, 1};
        result = mul(result, f);
    }
    if (k > 1) {
        GaussValue f = apply_prime_power(k, 1);
        if (f.q == 0) return GaussValue{0, 1};
        result = mul(result, f);
    }
    return result;
}

}  // namespace qtl::gauss
