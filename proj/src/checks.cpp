#include "qtl/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qtl/arith.hpp"
#include "qtl/gauss.hpp"
#include "qtl/meansquare.hpp"
#include "qtl/numeric_io.hpp"
#include "qtl/summation.hpp"

namespace qtl::checks {

namespace {

std::string fmt(double v) { return io::shortest(v); }

CheckResult make(const std::string& name, bool ok, const std::string& detail) {
    return CheckResult{name, ok, detail};
}

// Direct 3-D composite GL15 evaluation of int W(x) Phi(y) Phi(z) dx dy dz.
double triple_integral_direct(const weights::BumpWeight& w, const weights::BumpWeight& phi,
                            int panels) {
    struct Axis {
        std::vector<double> x, wt;
    };
    auto build = [panels](double lo, double hi) {
        Axis a;
        const double width = (hi - lo) / panels;
        for (int i = 0; i < panels; ++i) {
            const double c = lo + (i + 0.5) * width;
            for (const auto& [xn, wn] : weights::detail::kGL15) {
                a.x.push_back(c + 0.5 * width * xn);
                a.wt.push_back(0.5 * width * wn);
            }
        }
        return a;
    };
    const Axis ax = build(w.left(), w.right());
    const Axis ay = build(phi.left(), phi.right());
    summation::NeumaierSum sum;
    for (std::size_t i = 0; i < ax.x.size(); ++i) {
        const double wx = ax.wt[i] * w(ax.x[i]);
        if (wx == 0.0) continue;
        for (std::size_t j = 0; j < ay.x.size(); ++j) {
            const double wy = ay.wt[j] * phi(ay.x[j]);
            if (wy == 0.0) continue;
            for (std::size_t k = 0; k < ay.x.size(); ++k)
                sum.add(wx * wy * (ay.wt[k] * phi(ay.x[k])));
        }
    }
    return sum.value();
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

std::vector<CheckResult> gauss_suite(std::int64_t k_max, std::int64_t m_max,
                                     std::int64_t mult_k_max, std::int64_t mult_m_max,
                                     std::int64_t g0_k_max) {
    std::vector<CheckResult> out;

    // Oracle equivalence and realness on the full grid.
    double worst_diff = 0.0, worst_imag = 0.0;
    for (std::int64_t k = 1; k <= k_max; k += 2) {
        for (std::int64_t m = -m_max; m <= m_max; ++m) {
            const auto direct = gauss::gauss_direct({m, k});
            const double fast = gauss::gauss_fast({m, k}).to_double();
            worst_diff = std::max(worst_diff,
                                  std::abs(direct.real() - fast) / static_cast<double>(std::max<std::int64_t>(1, k)));
            worst_imag = std::max(worst_imag, std::abs(direct.imag()) / static_cast<double>(k));
        }
    }
    out.push_back(make("gauss.oracle_equivalence", worst_diff < 1e-6,
                       "max |direct - fast|/max(1,k) = " + fmt(worst_diff)));
    out.push_back(make("gauss.realness", worst_imag < 1e-8,
                       "max |Im direct|/k = " + fmt(worst_imag)));

    // Exact multiplicativity over coprime odd pairs.
    bool mult_ok = true;
    std::string mult_fail;
    for (std::int64_t m = -mult_m_max; m <= mult_m_max && mult_ok; ++m) {
        for (std::int64_t k1 = 1; k1 <= mult_k_max && mult_ok; k1 += 2) {
            for (std::int64_t k2 = 1; k2 <= mult_k_max; k2 += 2) {
                if (std::gcd(k1, k2) != 1) continue;
                const auto lhs = gauss::gauss_fast({m, k1 * k2});
                const auto rhs = gauss::mul(gauss::gauss_fast({m, k1}), gauss::gauss_fast({m, k2}));
                if (!(lhs == rhs)) {
                    mult_ok = false;
                    mult_fail = "first failure at m=" + std::to_string(m) +
                                " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
                    break;
                }
            }
        }
    }
    out.push_back(make("gauss.multiplicativity", mult_ok,
                       mult_ok ? "exact over all coprime odd pairs" : mult_fail));

    // G_0(k) = phi(k) on squares, 0 otherwise.
    bool g0_ok = true;
    std::string g0_fail;
    for (std::int64_t k = 1; k <= g0_k_max && g0_ok; k += 2) {
        const auto v = gauss::gauss_fast({0, k});
        const std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
        const bool is_square = r * r == k;
        std::int64_t expected = 0;
        if (is_square) {
            expected = k;
            std::int64_t kk = k;
            for (std::int64_t p = 2; p * p <= kk; ++p) {
                if (kk % p != 0) continue;
                expected -= expected / p;
                while (kk % p == 0) kk /= p;
            }
            if (kk > 1) expected -= expected / kk;
        }
        if (!(v.s == 1 && v.q == expected)) {
            g0_ok = false;
            g0_fail = "failure at k=" + std::to_string(k);
        }
    }
    out.push_back(make("gauss.g0_phi_on_squares", g0_ok,
                       g0_ok ? "G_0 = phi on squares, 0 otherwise" : g0_fail));
    return out;
}

std::vector<CheckResult> poisson_suite(std::int64_t n_max, const std::vector<double>& X_list,
                                       const weights::BumpWeight& w,
                                       const weights::QuadratureSpec& spec,
                                       std::vector<poisson::PoissonCheck>* rows_out) {
    std::vector<CheckResult> out;
    const auto rows = poisson::verify_poisson(n_max, X_list, w, spec);
    double worst = 0.0;
    std::int64_t worst_n = 0;
    double worst_X = 0.0;
    for (const auto& r : rows) {
        if (r.rel_err > worst) {
            worst = r.rel_err;
            worst_n = r.n;
            worst_X = r.X;
        }
    }
    std::ostringstream det;
    det << rows.size() << " rows, max rel_err = " << fmt(worst) << " at n=" << worst_n
        << " X=" << fmt(worst_X);
    out.push_back(make("poisson.identity_residual", worst < 1e-6, det.str()));

    // Truncation soundness on a subsample: doubling the k-cut moves the dual
    // sum by less than abs_tol.
    bool trunc_ok = true;
    double trunc_worst = 0.0;
    for (std::int64_t n : {std::int64_t{1}, std::int64_t{9}, std::min<std::int64_t>(n_max, 87)}) {
        if ((n & 1) == 0 || n > n_max) continue;
        for (double X : X_list) {
            const auto base = poisson::poisson_rhs(n, X, w, spec);
            const auto doubled = poisson::poisson_rhs(n, X, w, spec, 2 * base.k_terms);
            const double delta = std::abs(base.value - doubled.value);
            trunc_worst = std::max(trunc_worst, delta);
            if (delta >= spec.abs_tol) trunc_ok = false;
        }
    }
    out.push_back(make("poisson.truncation_soundness", trunc_ok,
                       "max shift under doubled K = " + fmt(trunc_worst)));
    if (rows_out) *rows_out = rows;
    return out;
}

std::vector<CheckResult> weights_suite(const weights::QuadratureSpec& spec) {
    using weights::BumpWeight;
    std::vector<CheckResult> out;
    const BumpWeight f(1.0, 2.0, 1.0);

    // Golden value for the canonical bump integral on (1,2); composite
    // 1e6-interval Simpson oracle, frozen. Independent of the adaptive path.
    constexpr double kGoldenBumpIntegral = 7.0298584066093304e-03;
    const double adaptive = weights::integrate(f, spec);
    out.push_back(make("weights.golden_integral",
                       std::abs(adaptive - kGoldenBumpIntegral) < 1e-12,
                       "adaptive = " + fmt(adaptive) + ", golden = " + fmt(kGoldenBumpIntegral)));

    // Translation invariance of the canonical family.
    const BumpWeight shifted(3.0, 4.0, 1.0);
    const double shifted_val = weights::integrate(shifted, spec);
    out.push_back(make("weights.translation_invariance",
                       std::abs(adaptive - shifted_val) < 1e-12,
                       "|I(1,2) - I(3,4)| = " + fmt(std::abs(adaptive - shifted_val))));

    // Decay envelope of the transform: |W~(xi)| xi^B peaks early and is tiny
    // at the right edge of [1, 100], for B = 2 and B = 4.
    for (const double B : {2.0, 4.0}) {
        double peak = 0.0;
        double peak_xi = 1.0;
        double at_100 = 0.0;
        for (int xi = 1; xi <= 100; ++xi) {
            const double v = std::abs(weights::tilde_transform(f, xi, spec)) *
                             std::pow(static_cast<double>(xi), B);
            if (v > peak) {
                peak = v;
                peak_xi = xi;
            }
            if (xi == 100) at_100 = v;
        }
        const bool ok = peak_xi <= 30.0 && at_100 <= 0.01 * peak;
        out.push_back(make("weights.transform_decay_B" + std::to_string(static_cast<int>(B)), ok,
                           "peak " + fmt(peak) + " at xi=" + fmt(peak_xi) + ", value at xi=100 is " +
                               fmt(at_100)));
    }

    // Halving tolerances moves the result by less than the reported bound.
    const auto full = weights::integrate_full(f, spec);
    weights::QuadratureSpec tighter = spec;
    tighter.abs_tol = spec.abs_tol / 2.0;
    tighter.rel_tol = spec.rel_tol / 2.0;
    const auto refined = weights::integrate_full(f, tighter);
    out.push_back(make("weights.order_consistency",
                       std::abs(full.value - refined.value) <= std::max(full.error_bound, 1e-15),
                       "|I - I_half| = " + fmt(std::abs(full.value - refined.value)) +
                           ", bound = " + fmt(full.error_bound)));

    // Product formula against a direct triple integral of W(x)Phi(y)Phi(z):
    // composite tensor GL15 over the support cube, summed as a triple loop.
    const BumpWeight W(1.0, 2.0, 1.0);
    const BumpWeight Phi(1.0, 2.0, 1.0);
    const double product = weights::h1_tilde_11(W, Phi, spec);
    const double triple = triple_integral_direct(W, Phi, 16);
    out.push_back(make("weights.h1_product_vs_triple", std::abs(product - triple) < 1e-10,
                       "|product - triple| = " + fmt(std::abs(product - triple))));
    return out;
}

std::vector<CheckResult> dirichlet_suite(const std::vector<double>& series_u,
                                         std::int64_t series_n_limit,
                                         std::int64_t series_prime_limit,
                                         std::vector<dirichlet::ZFactorReport>* factors_out) {
    std::vector<CheckResult> out;

    for (double u : series_u) {
        const auto chk = dirichlet::z_series_check(u, series_n_limit, series_prime_limit);
        std::ostringstream name;
        name << "dirichlet.series_product_u" << u;
        out.push_back(make(name.str(), chk.discrepancy < chk.tail_budget,
                           "discrepancy = " + fmt(chk.discrepancy) +
                               ", budget = " + fmt(chk.tail_budget)));
    }

    // Truncation Cauchy chain for Z2(1).
    bool cauchy_ok = true;
    double prev_val = 0.0, prev_bound = 0.0, prev_limit = 0.0;
    std::ostringstream cauchy_det;
    for (std::int64_t P : {std::int64_t{1000}, std::int64_t{10000}, std::int64_t{100000},
                           std::int64_t{1000000}}) {
        const auto v = dirichlet::z2_at(1.0, P);
        if (prev_limit > 0) {
            if (std::abs(v.value - prev_val) > prev_bound + v.tail_bound) cauchy_ok = false;
            if (v.tail_bound >= prev_bound) cauchy_ok = false;  // monotone bounds
        }
        prev_val = v.value;
        prev_bound = v.tail_bound;
        prev_limit = static_cast<double>(P);
    }
    cauchy_det << "Z2(1) = " << fmt(prev_val) << " at P=1e6, bound " << fmt(prev_bound);
    out.push_back(make("dirichlet.z2_cauchy", cauchy_ok, cauchy_det.str()));

    // Euler factors: all three prime classes across p and (alpha, beta).
    std::vector<dirichlet::ZFactorReport> reports;
    bool slice_ok = true, tail_ok = true;
    double worst_slice = 0.0;
    for (std::int64_t p : {std::int64_t{3}, std::int64_t{5}, std::int64_t{7}, std::int64_t{11}}) {
        for (double ar : {0.5, 1.0}) {
            for (double br : {0.5, 1.0}) {
                const std::complex<double> a{ar, 0.0}, b{br, 0.0}, g{0.6, 0.0};
                // p | 2q; p | k1 with p coprime to 2q; generic
                reports.push_back(dirichlet::euler_factor_Z_check(p, a, b, g, p, 1, 20));
                reports.push_back(dirichlet::euler_factor_Z_check(p, a, b, g, 1, p, 20));
                reports.push_back(dirichlet::euler_factor_Z_check(p, a, b, g, 1, 1, 20));
            }
        }
    }
    for (const auto& r : reports) {
        worst_slice = std::max(worst_slice, r.slice0_err);
        if (r.slice0_err >= 1e-12) slice_ok = false;
        if (r.tail_magnitude >= r.tail_envelope) tail_ok = false;
    }
    out.push_back(make("dirichlet.euler_factor_slices", slice_ok,
                       "max k2=0 slice error = " + fmt(worst_slice)));
    out.push_back(make("dirichlet.euler_factor_tails", tail_ok,
                       tail_ok ? "all tails within decay envelopes" : "envelope exceeded"));
    if (factors_out) *factors_out = reports;
    return out;
}

std::vector<CheckResult> meansquare_oracle_suite() {
    std::vector<CheckResult> out;
    const weights::BumpWeight W(1.0, 2.0, 1.0);
    const weights::BumpWeight Phi(1.0, 2.0, 1.0);
    const auto tables = arith::sieve_mobius(1100);

    bool equal = true;
    std::string fail;
    for (double X : {100.0, 200.0, 350.0, 500.0}) {
        for (double Y : {10.0, 20.0, 35.0, 50.0}) {
            const auto fast = meansquare::brute_force_S(X, Y, W, Phi, tables, {2});
            const auto naive = meansquare::naive_mean_square(X, Y, W, Phi, tables);
            if (fast.s != naive.s || fast.d_count != naive.d_count) {
                equal = false;
                fail = "mismatch at X=" + fmt(X) + " Y=" + fmt(Y);
            }
        }
    }
    out.push_back(make("meansquare.naive_oracle_bitwise", equal,
                       equal ? "optimized == naive on the full grid" : fail));

    // d_count against an independent enumeration through SquarefreeOddSet.
    const auto sf = arith::SquarefreeOddSet::build(tables);
    const double X = 350.0;
    const auto res = meansquare::brute_force_S(X, 20.0, W, Phi, tables, {1});
    std::int64_t count = 0;
    for (std::int64_t d = 1; d <= tables.limit; ++d)
        if (sf.contains(d) && W(static_cast<double>(d) / X) > 0.0) ++count;
    out.push_back(make("meansquare.d_count_enumeration", count == res.d_count,
                       "engine " + std::to_string(res.d_count) + ", set " + std::to_string(count)));
    return out;
}

}  // namespace qtl::checks
