#pragma once
// Brute-force evaluation of the smoothed mean square
//
//   S(X,Y) = sum_{d odd square-free} W(d/X) * ( sum_n mu(n) (8d|n) Phi(n/Y) )^2
//
// and the predicted main term (4/pi^2) X Y h1 Z_2(1), plus the sweep harness
// measuring their ratio.
//
// Two engines compute S: an optimized one driving the d-loop through
// precomputed residue tables of (.|n), and a plain double loop that calls
// kronecker(8d, n) per pair. Both share the same fixed-chunk compensated
// reduction, so they agree bit for bit, and results are independent of the
// thread count.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qtl/arith.hpp"
#include "qtl/weights.hpp"

namespace qtl::meansquare {

enum class InnerScale { Y, X };               // argument of the inner weight: Phi(n/Y) or Phi(n/X)
enum class H1Form { diagonal, product };      // int W * int Phi^2  versus  int W * (int Phi)^2

struct EngineOptions {
    int threads = 1;
    InnerScale inner_scale = InnerScale::Y;
};

struct BruteForceResult {
    double s = 0.0;
    std::int64_t d_count = 0;
};

// Optimized engine. Throws std::invalid_argument if the sieve does not cover
// ceil(W.right()*X) and ceil(Phi.right()*Yscale).
BruteForceResult brute_force_S(double X, double Y, const weights::BumpWeight& w,
                               const weights::BumpWeight& phi, const arith::MobiusTable& tables,
                               const EngineOptions& opt = {});

// Straightforward double-loop oracle, kept independent of the residue-table
// path. Same windows, same term order, same reduction.
BruteForceResult naive_mean_square(double X, double Y, const weights::BumpWeight& w,
                                   const weights::BumpWeight& phi, const arith::MobiusTable& tables,
                                   InnerScale inner_scale = InnerScale::Y);

// (4/pi^2) X Y h1 Z2(1), where h1 is the weight functional selected by form.
// The diagonal form is the one the empirical sum converges to.
double main_term(double X, double Y, const weights::BumpWeight& w, const weights::BumpWeight& phi,
                 const weights::QuadratureSpec& spec, std::int64_t prime_limit,
                 H1Form form = H1Form::diagonal);

struct MeanSquareRow {
    double X = 0.0;
    double Y = 0.0;
    double s_empirical = 0.0;
    double s_predicted = 0.0;
    double ratio = 0.0;
    std::int64_t d_count = 0;
    double runtime_seconds = 0.0;
};

inline constexpr const char* kCsvHeader = "X,Y,s_empirical,s_predicted,ratio,d_count,runtime_seconds";

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const MeanSquareRow& row);

struct ExperimentPlan {
    std::vector<double> X_values;                 // evaluated in ascending order
    bool y_is_power = true;                       // Y = X^theta, else Y = y_value
    double y_value = 0.5;
    weights::BumpWeight w{1.0, 2.0, 1.0};
    weights::BumpWeight phi{1.0, 2.0, 1.0};
    weights::QuadratureSpec quadrature{};
    int threads = 1;
    InnerScale inner_scale = InnerScale::Y;
    H1Form h1_form = H1Form::diagonal;
    std::int64_t prime_limit = 1'000'000;
};

// One row per X, ascending. csv_out, when non-null, receives the header and
// then each row as soon as it is computed, so partial runs are usable.
// Per-row failures are recorded in errors_out and the sweep continues.
std::vector<MeanSquareRow> run_experiment(const ExperimentPlan& plan, std::ostream* csv_out = nullptr,
                                          std::vector<std::string>* errors_out = nullptr);

}  // namespace qtl::meansquare
