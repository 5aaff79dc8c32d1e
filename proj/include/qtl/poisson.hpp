#pragma once
// Numerical verification of the Poisson summation identity for quadratic
// characters: for odd n and smooth W supported on (0, inf),
//
//   sum_{d odd} (d|n) W(d/X) = (X/2n)(2|n) sum_{k in Z} (-1)^k G_k(n) W~(kX/2n).
//
// The left side is an exact finite sum; the right side is truncated at a
// |k| bound chosen from the measured decay of W~.

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "qtl/weights.hpp"

namespace qtl::poisson {

struct PoissonCheck {
    std::int64_t n = 1;
    double X = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
    std::int64_t k_terms_used = 1;
};

// Division floor in the relative error; rows whose left side cancels to
// zero are compared absolutely instead.
inline constexpr double kRelErrFloor = 1e-30;

// Exact finite sum over odd d with d/X inside the support of W.
double poisson_lhs(std::int64_t n, double X, const weights::BumpWeight& w);

struct LhsDetail {
    double value = 0.0;
    double gross = 0.0;  // sum of |(d|n) W(d/X)|, the cancellation scale
};
LhsDetail poisson_lhs_detail(std::int64_t n, double X, const weights::BumpWeight& w);

// Memo for W~ evaluations, keyed by the reduced fraction (k/g, n/g) with
// g = gcd(|k|, n); the transform argument is X*(k/g)/(2*(n/g)). Valid for a
// fixed (W, X, spec).
using TildeCache = std::map<std::pair<std::int64_t, std::int64_t>, double>;

struct RhsResult {
    double value = 0.0;
    std::int64_t k_terms = 1;  // final |k| <= K bound actually summed
};

// Truncated dual sum. K grows geometrically from ceil(2n(b+1)/X)*8 until two
// successive partial sums differ by less than spec.abs_tol/10. A positive
// k_override forces the bound instead (used by truncation-soundness tests).
RhsResult poisson_rhs(std::int64_t n, double X, const weights::BumpWeight& w,
                      const weights::QuadratureSpec& spec, std::int64_t k_override = 0,
                      TildeCache* cache = nullptr);

// One PoissonCheck per (odd n <= n_max, X in X_list), in that order.
std::vector<PoissonCheck> verify_poisson(std::int64_t n_max, const std::vector<double>& X_list,
                                         const weights::BumpWeight& w,
                                         const weights::QuadratureSpec& spec);

// Columns: n,X,lhs,rhs,rel_err,k_terms_used
void write_csv(std::ostream& os, const std::vector<PoissonCheck>& rows);

}  // namespace qtl::poisson
