#pragma once
// Euler products and Dirichlet series built from the square-free odd series
//
//   Z(u) = sum_{n odd square-free} n^{-u} prod_{p|n} p/(p+1)
//        = prod_{p>2} (1 + (p/(p+1)) p^{-u}) =: zeta(u) Z_2(u),
//
// plus per-prime Euler-factor checks for the three-parameter series
// Z(alpha, beta, gamma; q, k1) whose local factors involve G_{k1 k2^2}.

#include <complex>
#include <cstdint>
#include <ostream>
#include <vector>

namespace qtl::dirichlet {

struct EulerProductValue {
    double value = 0.0;
    std::int64_t prime_limit = 0;
    double tail_bound = 0.0;  // |true value - value| <= tail_bound
};

// Truncated product Z_2(u) = (1 - 2^-u) prod_{2<p<=P} (1 + (p/(p+1))p^-u)(1 - p^-u).
// Requires u >= 0.51 (absolute convergence region) and prime_limit >= 3.
EulerProductValue z2_at(double u, std::int64_t prime_limit);

// Truncated zeta(u) for real u >= 2 with an Euler-Maclaurin tail estimate.
struct ZetaValue {
    double value = 0.0;
    double tail_bound = 0.0;
};
ZetaValue zeta_series(double u, std::int64_t n_limit);

struct ZSeriesCheck {
    double discrepancy = 0.0;  // |direct series - zeta(u) * Z2(u)|
    double tail_budget = 0.0;  // sum of all truncation bounds involved
};

// Cross-check of the Euler factorization: direct summation of Z(u) against
// zeta(u) * z2_at(u). Requires u >= 2.
ZSeriesCheck z_series_check(double u, std::int64_t n_limit, std::int64_t prime_limit);

struct ZFactorReport {
    std::int64_t p = 3;
    std::complex<double> alpha, beta, gamma;
    std::int64_t q = 1;
    std::int64_t k1 = 1;
    std::complex<double> direct_value;     // truncated local factor via G sums
    std::complex<double> reference_value;  // closed/leading form, same truncation
    double abs_err = 0.0;                  // |direct_value - reference_value|
    // k2 = 0 slice versus its closed form (exact identity)
    std::complex<double> slice0_direct;
    std::complex<double> slice0_reference;
    double slice0_err = 0.0;
    // magnitude of the k2 >= 1 part against its decay envelope
    double tail_magnitude = 0.0;
    double tail_envelope = 0.0;
};

// Local Euler factor at p of Z(alpha,beta,gamma;q,k1), summed directly over
// square-free exponents n1,n2 in {0,1} and k2-exponent 0..k2_max, compared
// with the closed forms: (1-p^{-2 gamma})^{-1} when p | 2q, and the k2 = 0
// slice 1 - chi_{k1}(p)(p^{-1/2-alpha} + p^{-1/2-beta}) (which degenerates to
// 1 - p^{-(1+alpha+beta)} when p | k1) otherwise.
ZFactorReport euler_factor_Z_check(std::int64_t p, std::complex<double> alpha,
                                   std::complex<double> beta, std::complex<double> gamma,
                                   std::int64_t q, std::int64_t k1, int k2_max);

void write_csv(std::ostream& os, const std::vector<ZFactorReport>& rows);

}  // namespace qtl::dirichlet
