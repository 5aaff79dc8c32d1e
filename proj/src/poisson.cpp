#include "qtl/poisson.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qtl/arith.hpp"
#include "qtl/gauss.hpp"
#include "qtl/numeric_io.hpp"
#include "qtl/summation.hpp"

namespace qtl::poisson {

namespace {

void require_args(std::int64_t n, double X) {
    if (n < 1 || (n & 1) == 0) throw std::invalid_argument("poisson: n must be odd and positive");
    if (!(X > 0.0)) throw std::invalid_argument("poisson: X must be positive");
}

}  // namespace

LhsDetail poisson_lhs_detail(std::int64_t n, double X, const weights::BumpWeight& w) {
    require_args(n, X);
    LhsDetail out;
    const double lo = w.left() * X;
    const double hi = w.right() * X;
    if (hi < 1.0) return out;
    std::int64_t d = static_cast<std::int64_t>(std::floor(lo)) + 1;
    if (d < 1) d = 1;
    if ((d & 1) == 0) ++d;
    summation::NeumaierSum sum;
    double gross = 0.0;
    for (; static_cast<double>(d) < hi; d += 2) {
        int chi = arith::kronecker(d, n);
        if (chi == 0) continue;
        double wv = w(static_cast<double>(d) / X);
        if (wv == 0.0) continue;
        sum.add(chi > 0 ? wv : -wv);
        gross += wv;
    }
    out.value = sum.value();
    out.gross = gross;
    return out;
}

double poisson_lhs(std::int64_t n, double X, const weights::BumpWeight& w) {
    return poisson_lhs_detail(n, X, w).value;
}

namespace {

// W~(X k / 2n) evaluated through the reduced fraction so equal arguments hit
// the same cache slot and the same floating value.
double tilde_term(std::int64_t k, std::int64_t n, double X, const weights::BumpWeight& w,
                  const weights::QuadratureSpec& spec, TildeCache* cache) {
    std::int64_t g = std::gcd(k < 0 ? -k : k, n);
    if (k == 0) g = n;
    const std::int64_t kr = k / g;
    const std::int64_t nr = n / g;
    if (cache) {
        auto it = cache->find({kr, nr});
        if (it != cache->end()) return it->second;
    }
    const double xi = X * static_cast<double>(kr) / (2.0 * static_cast<double>(nr));
    const double v = weights::tilde_transform(w, xi, spec);
    if (cache) cache->emplace(std::make_pair(kr, nr), v);
    return v;
}

double rhs_sum_to(std::int64_t K, std::int64_t n, double X, const weights::BumpWeight& w,
                  const weights::QuadratureSpec& spec, TildeCache* cache) {
    summation::NeumaierSum sum;
    for (std::int64_t k = -K; k <= K; ++k) {
        gauss::GaussValue g = gauss::gauss_fast({k, n});
        if (g.q == 0) continue;
        double term = g.to_double() * tilde_term(k, n, X, w, spec, cache);
        sum.add((k & 1) ? -term : term);
    }
    const double pref = X / (2.0 * static_cast<double>(n)) * arith::kronecker(2, n);
    return pref * sum.value();
}

}  // namespace

RhsResult poisson_rhs(std::int64_t n, double X, const weights::BumpWeight& w,
                      const weights::QuadratureSpec& spec, std::int64_t k_override,
                      TildeCache* cache) {
    require_args(n, X);
    TildeCache local;
    if (!cache) cache = &local;
    if (k_override > 0)
        return RhsResult{rhs_sum_to(k_override, n, X, w, spec, cache), k_override};

    std::int64_t K = static_cast<std::int64_t>(
                         std::ceil(2.0 * static_cast<double>(n) * (w.right() + 1.0) / X)) *
                     8;
    if (K < 8) K = 8;
    double prev = rhs_sum_to(K, n, X, w, spec, cache);
    for (int stage = 0; stage < 24; ++stage) {
        const std::int64_t K2 = 2 * K;
        const double cur = rhs_sum_to(K2, n, X, w, spec, cache);
        if (std::abs(cur - prev) < spec.abs_tol / 10.0) return RhsResult{cur, K2};
        K = K2;
        prev = cur;
    }
    throw std::runtime_error("poisson_rhs: dual k-sum did not stabilize");
}

std::vector<PoissonCheck> verify_poisson(std::int64_t n_max, const std::vector<double>& X_list,
                                         const weights::BumpWeight& w,
                                         const weights::QuadratureSpec& spec) {
    if (n_max < 1) throw std::invalid_argument("verify_poisson: n_max must be >= 1");
    std::vector<PoissonCheck> rows;
    // One transform memo per X: the reduced-fraction keys are shared by all n.
    std::vector<TildeCache> caches(X_list.size());
    for (std::int64_t n = 1; n <= n_max; n += 2) {
        for (std::size_t xi = 0; xi < X_list.size(); ++xi) {
            const double X = X_list[xi];
            TildeCache& cache = caches[xi];
            PoissonCheck row;
            row.n = n;
            row.X = X;
            LhsDetail lhs = poisson_lhs_detail(n, X, w);
            RhsResult rhs = poisson_rhs(n, X, w, spec, 0, &cache);
            row.lhs = lhs.value;
            row.rhs = rhs.value;
            row.k_terms_used = rhs.k_terms;
            // Rows whose left side is zero up to floating cancellation (empty
            // support, or exact symmetry of the weight against the character)
            // compare absolutely.
            const double cancel_floor = std::max(kRelErrFloor, 1e-12 * lhs.gross);
            if (std::abs(lhs.value) <= cancel_floor)
                row.rel_err = std::abs(lhs.value - rhs.value);
            else
                row.rel_err = std::abs(lhs.value - rhs.value) / std::abs(lhs.value);
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<PoissonCheck>& rows) {
    os << "n,X,lhs,rhs,rel_err,k_terms_used\n";
    for (const auto& r : rows) {
        os << r.n << ',' << io::shortest(r.X) << ',' << io::shortest(r.lhs) << ','
           << io::shortest(r.rhs) << ',' << io::shortest(r.rel_err) << ',' << r.k_terms_used
           << '\n';
    }
}

}  // namespace qtl::poisson
