#include "qtl/dirichlet.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtl/arith.hpp"
#include "qtl/gauss.hpp"
#include "qtl/numeric_io.hpp"
#include "qtl/summation.hpp"

namespace qtl::dirichlet {

EulerProductValue z2_at(double u, std::int64_t prime_limit) {
    if (!(u >= 0.51)) throw std::domain_error("z2_at: u must be >= 0.51");
    if (prime_limit < 3) throw std::invalid_argument("z2_at: prime_limit must be >= 3");
    double v = 1.0 - std::pow(2.0, -u);
    for (std::int64_t p : arith::sieve_primes(prime_limit)) {
        if (p == 2) continue;
        const double pd = static_cast<double>(p);
        const double pu = std::pow(pd, -u);
        v *= (1.0 + pd / (pd + 1.0) * pu) * (1.0 - pu);
    }
    // Per-factor defect: |f_p - 1| <= p^{-u-1} + p^{-2u} <= 2 p^{-s}, with
    // s = min(u+1, 2u); compare against sum_{n>P} 2 n^{-s} <= 2 P^{1-s}/(s-1).
    const double s = std::min(u + 1.0, 2.0 * u);
    const double log_tail =
        2.0 * std::pow(static_cast<double>(prime_limit), 1.0 - s) / (s - 1.0);
    EulerProductValue out;
    out.value = v;
    out.prime_limit = prime_limit;
    out.tail_bound = std::abs(v) * std::expm1(log_tail);
    return out;
}

ZetaValue zeta_series(double u, std::int64_t n_limit) {
    if (!(u >= 2.0)) throw std::domain_error("zeta_series: u must be >= 2");
    if (n_limit < 2) throw std::invalid_argument("zeta_series: n_limit must be >= 2");
    summation::NeumaierSum sum;
    for (std::int64_t n = 1; n <= n_limit; ++n)
        sum.add(std::pow(static_cast<double>(n), -u));
    const double N = static_cast<double>(n_limit);
    // Euler-Maclaurin: sum_{n>N} n^-u = N^{1-u}/(u-1) - N^-u/2 + O(u N^{-u-1})
    ZetaValue out;
    out.value = sum.value() + std::pow(N, 1.0 - u) / (u - 1.0) - 0.5 * std::pow(N, -u);
    out.tail_bound = u * std::pow(N, -u - 1.0);
    return out;
}

ZSeriesCheck z_series_check(double u, std::int64_t n_limit, std::int64_t prime_limit) {
    if (!(u >= 2.0)) throw std::domain_error("z_series_check: u must be >= 2");
    if (n_limit < 1 || prime_limit < 3)
        throw std::invalid_argument("z_series_check: limits too small");

    // Direct side: smallest-prime-factor sieve gives prod_{p|n} p/(p+1) and
    // square-freeness in one factorization pass per n.
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n_limit) + 1, 0);
    for (std::int64_t i = 2; i <= n_limit; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= n_limit; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
    summation::NeumaierSum direct;
    direct.add(1.0);  // n = 1
    for (std::int64_t n = 3; n <= n_limit; n += 2) {
        std::int64_t m = n;
        double prod = 1.0;
        bool squarefree = true;
        while (m > 1) {
            const std::int64_t p = spf[static_cast<std::size_t>(m)];
            m /= p;
            if (m % p == 0) {
                squarefree = false;
                break;
            }
            prod *= static_cast<double>(p) / (static_cast<double>(p) + 1.0);
        }
        if (squarefree) direct.add(prod * std::pow(static_cast<double>(n), -u));
    }
    const double direct_tail =
        std::pow(static_cast<double>(n_limit), 1.0 - u) / (u - 1.0);

    const ZetaValue zeta = zeta_series(u, n_limit);
    const EulerProductValue z2 = z2_at(u, prime_limit);

    ZSeriesCheck out;
    out.discrepancy = std::abs(direct.value() - zeta.value * z2.value);
    out.tail_budget = direct_tail + std::abs(zeta.value) * z2.tail_bound +
                      zeta.tail_bound * std::abs(z2.value) + zeta.tail_bound * z2.tail_bound;
    return out;
}

namespace {

std::complex<double> cpow(double base, std::complex<double> z) {
    return std::exp(z * std::log(base));
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t t = 2; t * t <= n; ++t)
        if (n % t == 0) return false;
    return true;
}

bool is_squarefree(std::int64_t n) {
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

ZFactorReport euler_factor_Z_check(std::int64_t p, std::complex<double> alpha,
                                   std::complex<double> beta, std::complex<double> gamma,
                                   std::int64_t q, std::int64_t k1, int k2_max) {
    if (!is_prime(p)) throw std::invalid_argument("euler_factor_Z_check: p must be prime");
    if (q < 1) throw std::invalid_argument("euler_factor_Z_check: q must be positive");
    if (k1 < 1 || (k1 & 1) == 0 || !is_squarefree(k1))
        throw std::invalid_argument("euler_factor_Z_check: k1 must be positive, odd, square-free");
    if (k2_max < 4) throw std::invalid_argument("euler_factor_Z_check: k2_max must be >= 4");
    if (gamma.real() < 0.51) throw std::domain_error("euler_factor_Z_check: Re(gamma) >= 0.51 required");
    if (alpha.real() < 0.01 || beta.real() < 0.01)
        throw std::domain_error("euler_factor_Z_check: Re(alpha), Re(beta) >= 0.01 required");

    ZFactorReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.gamma = gamma;
    rep.q = q;
    rep.k1 = k1;

    const bool p_div_2q = (2 * q) % p == 0;
    const double pd = static_cast<double>(p);

    // Direct local factor: n_i = p^{e_i} with e_i in {0,1} (mu kills higher
    // powers), k2 = p^c with 0 <= c <= k2_max. Exponents e_i are forced to 0
    // when p | 2q by the coprimality condition on n_1, n_2.
    std::complex<double> direct{0.0, 0.0};
    std::complex<double> slice0{0.0, 0.0};
    for (int c = 0; c <= k2_max; ++c) {
        std::int64_t m = k1;
        bool overflow = false;
        for (int i = 0; i < 2 * c; ++i) {
            if (m > INT64_MAX / p) { overflow = true; break; }
            m *= p;
        }
        if (overflow) break;  // G_m(p^{e1+e2}) contributes 0 or the term is < 1e-300
        std::complex<double> slice{0.0, 0.0};
        for (int e1 = 0; e1 <= (p_div_2q ? 0 : 1); ++e1) {
            for (int e2 = 0; e2 <= (p_div_2q ? 0 : 1); ++e2) {
                std::int64_t k = 1;
                for (int i = 0; i < e1 + e2; ++i) k *= p;
                const gauss::GaussValue g = gauss::gauss_fast({m, k});
                if (g.q == 0) continue;
                const double mu_sign = ((e1 + e2) & 1) ? -1.0 : 1.0;
                const std::complex<double> denom =
                    cpow(pd, static_cast<double>(e1) * alpha + static_cast<double>(e2) * beta +
                                 2.0 * static_cast<double>(c) * gamma);
                slice += mu_sign * g.to_double() / (static_cast<double>(k) * denom);
            }
        }
        direct += slice;
        if (c == 0) slice0 = slice;
    }
    rep.direct_value = direct;
    rep.slice0_direct = slice0;

    if (p_div_2q) {
        // Geometric closed form, truncated identically.
        std::complex<double> geo{0.0, 0.0};
        for (int c = 0; c <= k2_max; ++c) geo += cpow(pd, -2.0 * static_cast<double>(c) * gamma);
        rep.reference_value = geo;
        rep.slice0_reference = std::complex<double>{1.0, 0.0};
        // envelope: distance to the untruncated closed form
        const std::complex<double> closed = 1.0 / (1.0 - cpow(pd, -2.0 * gamma));
        rep.tail_magnitude = std::abs(direct - closed);
        rep.tail_envelope = 10.0 * std::pow(pd, -(1.0 + 2.0 * 0.01) * static_cast<double>(k2_max));
    } else {
        std::complex<double> slice0_closed;
        if (k1 % p == 0) {
            slice0_closed = 1.0 - cpow(pd, -(1.0 + alpha + beta));
        } else {
            const double chi = arith::kronecker(k1, p);
            slice0_closed = 1.0 - chi * (cpow(pd, -(0.5 + alpha)) + cpow(pd, -(0.5 + beta)));
        }
        rep.reference_value = slice0_closed;
        rep.slice0_reference = slice0_closed;
        // k2 >= 1 contribution obeys the 1/p^{1+2e} envelope on the domain edge
        rep.tail_magnitude = std::abs(direct - slice0_closed);
        rep.tail_envelope = 10.0 * std::pow(pd, -(1.0 + 2.0 * 0.01));
    }
    rep.abs_err = std::abs(rep.direct_value - rep.reference_value);
    rep.slice0_err = std::abs(rep.slice0_direct - rep.slice0_reference);
    return rep;
}

void write_csv(std::ostream& os, const std::vector<ZFactorReport>& rows) {
    os << "p,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,q,k1,"
          "direct_re,direct_im,reference_re,reference_im,abs_err,"
          "slice0_err,tail_magnitude,tail_envelope\n";
    for (const auto& r : rows) {
        os << r.p << ',' << io::shortest(r.alpha.real()) << ',' << io::shortest(r.alpha.imag())
           << ',' << io::shortest(r.beta.real()) << ',' << io::shortest(r.beta.imag()) << ','
           << io::shortest(r.gamma.real()) << ',' << io::shortest(r.gamma.imag()) << ',' << r.q
           << ',' << r.k1 << ',' << io::shortest(r.direct_value.real()) << ','
           << io::shortest(r.direct_value.imag()) << ',' << io::shortest(r.reference_value.real())
           << ',' << io::shortest(r.reference_value.imag()) << ',' << io::shortest(r.abs_err)
           << ',' << io::shortest(r.slice0_err) << ',' << io::shortest(r.tail_magnitude) << ','
           << io::shortest(r.tail_envelope) << '\n';
    }
}

}  // namespace qtl::dirichlet
