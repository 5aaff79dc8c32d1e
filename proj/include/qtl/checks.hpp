#pragma once
// Verification suites shared by the CLI verify-* commands and the acceptance
// runner. Each suite returns one CheckResult per invariant; a suite passes
// iff every result does.

#include <cstdint>
#include <string>
#include <vector>

#include "qtl/dirichlet.hpp"
#include "qtl/poisson.hpp"
#include "qtl/weights.hpp"

namespace qtl::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

bool all_passed(const std::vector<CheckResult>& results);

// gauss_fast against gauss_direct on the full (m, k) grid, realness of the
// direct sums, exact multiplicativity over coprime pairs, and the G_0
// specialization to Euler phi on squares.
std::vector<CheckResult> gauss_suite(std::int64_t k_max = 999, std::int64_t m_max = 50,
                                     std::int64_t mult_k_max = 99, std::int64_t mult_m_max = 30,
                                     std::int64_t g0_k_max = 9999);

// Identity residual over (odd n <= n_max) x X_list, plus truncation soundness
// at doubled K on a subsample. rows_out, when given, receives the full table.
std::vector<CheckResult> poisson_suite(std::int64_t n_max, const std::vector<double>& X_list,
                                       const weights::BumpWeight& w,
                                       const weights::QuadratureSpec& spec,
                                       std::vector<poisson::PoissonCheck>* rows_out = nullptr);

// Golden integral, translation invariance, transform decay envelope,
// tolerance-halving consistency, and the product formula against a direct
// triple integral.
std::vector<CheckResult> weights_suite(const weights::QuadratureSpec& spec);

// Series/product equivalence at the given u values, z2 truncation Cauchy
// chain, and the Euler-factor grid (three prime classes).
std::vector<CheckResult> dirichlet_suite(const std::vector<double>& series_u,
                                         std::int64_t series_n_limit,
                                         std::int64_t series_prime_limit,
                                         std::vector<dirichlet::ZFactorReport>* factors_out = nullptr);

// Optimized engine against the naive double loop, bit for bit, on a small
// (X, Y) grid, plus d_count independence.
std::vector<CheckResult> meansquare_oracle_suite();

}  // namespace qtl::checks
