#pragma once
// Line-oriented `key = value` experiment configuration. Unknown keys are
// rejected; every key has a documented default (see README). Blank lines and
// lines starting with '#' are ignored.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtl/meansquare.hpp"
#include "qtl/weights.hpp"

namespace qtl::config {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    int line_number;
};

struct YRule {
    bool is_power = true;
    double value = 0.5;  // exponent for power, constant for fixed
};

struct ExperimentConfig {
    // run-meansquare
    std::vector<double> X_values = {1000.0, 10000.0, 100000.0};
    YRule Y_rule{};
    double W_a = 1.0, W_b = 2.0, W_amplitude = 1.0;
    double Phi_a = 1.0, Phi_b = 2.0, Phi_amplitude = 1.0;
    weights::QuadratureSpec quadrature{1e-12, 1e-12, 48};
    int threads = 1;
    meansquare::InnerScale inner_scale = meansquare::InnerScale::Y;
    meansquare::H1Form main_term_h1 = meansquare::H1Form::diagonal;
    std::int64_t prime_limit = 1'000'000;
    // verify-poisson
    std::int64_t poisson_n_max = 99;
    std::vector<double> poisson_X = {10.0, 100.0};
    // verify-dirichlet
    std::vector<double> series_u = {2.0, 3.0};
    std::int64_t series_n_limit = 1'000'000;
    std::int64_t series_prime_limit = 1'000'000;
    // compute-z2
    double z2_u = 1.0;
    std::vector<std::int64_t> z2_prime_limits = {1000, 10000, 100000, 1000000, 10000000};
    // verify-gauss
    std::int64_t gauss_k_max = 999;
    std::int64_t gauss_m_max = 50;

    weights::BumpWeight make_W() const { return {W_a, W_b, W_amplitude}; }
    weights::BumpWeight make_Phi() const { return {Phi_a, Phi_b, Phi_amplitude}; }
};

// Parses the file at path. Throws ConfigError with the offending line number
// for malformed lines, unknown keys, and domain violations.
ExperimentConfig parse_config(const std::string& path);

// Same, from an already-loaded buffer (used by tests).
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace qtl::config
