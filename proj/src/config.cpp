#include "qtl/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qtl::config {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw ConfigError("invalid number '" + tok + "'", line);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        throw ConfigError("invalid number '" + tok + "'", line);
    }
}

std::int64_t parse_int(const std::string& tok, int line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ConfigError("invalid integer '" + tok + "'", line);
    return v;
}

void apply(ExperimentConfig& c, const std::string& key, const std::string& value, int line) {
    const auto toks = split_ws(value);
    auto need_one = [&]() -> const std::string& {
        if (toks.size() != 1) throw ConfigError("key '" + key + "' expects a single value", line);
        return toks[0];
    };
    if (key == "X_values") {
        c.X_values.clear();
        for (const auto& t : toks) c.X_values.push_back(parse_double(t, line));
    } else if (key == "Y_rule") {
        if (toks.size() != 2 || (toks[0] != "power" && toks[0] != "fixed"))
            throw ConfigError("Y_rule expects 'power <theta>' or 'fixed <Y>'", line);
        c.Y_rule.is_power = toks[0] == "power";
        c.Y_rule.value = parse_double(toks[1], line);
        if (c.Y_rule.is_power && !(c.Y_rule.value > 0.0 && c.Y_rule.value < 1.0))
            throw ConfigError(
                "Y_rule power exponent must lie in (0,1): the asymptotic formula is valid "
                "only when Y grows slower than X (Y ~ X^theta with theta < 1)",
                line);
        if (!c.Y_rule.is_power && !(c.Y_rule.value > 0.0))
            throw ConfigError("Y_rule fixed value must be positive", line);
    } else if (key == "W_a") {
        c.W_a = parse_double(need_one(), line);
    } else if (key == "W_b") {
        c.W_b = parse_double(need_one(), line);
    } else if (key == "W_amplitude") {
        c.W_amplitude = parse_double(need_one(), line);
    } else if (key == "Phi_a") {
        c.Phi_a = parse_double(need_one(), line);
    } else if (key == "Phi_b") {
        c.Phi_b = parse_double(need_one(), line);
    } else if (key == "Phi_amplitude") {
        c.Phi_amplitude = parse_double(need_one(), line);
    } else if (key == "abs_tol") {
        c.quadrature.abs_tol = parse_double(need_one(), line);
    } else if (key == "rel_tol") {
        c.quadrature.rel_tol = parse_double(need_one(), line);
    } else if (key == "max_depth") {
        c.quadrature.max_depth = static_cast<int>(parse_int(need_one(), line));
    } else if (key == "threads") {
        c.threads = static_cast<int>(parse_int(need_one(), line));
    } else if (key == "inner_scale") {
        const auto& t = need_one();
        if (t == "Y")
            c.inner_scale = meansquare::InnerScale::Y;
        else if (t == "X")
            c.inner_scale = meansquare::InnerScale::X;
        else
            throw ConfigError("inner_scale must be 'Y' or 'X'", line);
    } else if (key == "main_term_h1") {
        const auto& t = need_one();
        if (t == "diagonal")
            c.main_term_h1 = meansquare::H1Form::diagonal;
        else if (t == "product")
            c.main_term_h1 = meansquare::H1Form::product;
        else
            throw ConfigError("main_term_h1 must be 'diagonal' or 'product'", line);
    } else if (key == "prime_limit") {
        c.prime_limit = parse_int(need_one(), line);
    } else if (key == "poisson_n_max") {
        c.poisson_n_max = parse_int(need_one(), line);
    } else if (key == "poisson_X") {
        c.poisson_X.clear();
        for (const auto& t : toks) c.poisson_X.push_back(parse_double(t, line));
    } else if (key == "series_u") {
        c.series_u.clear();
        for (const auto& t : toks) c.series_u.push_back(parse_double(t, line));
    } else if (key == "series_n_limit") {
        c.series_n_limit = parse_int(need_one(), line);
    } else if (key == "series_prime_limit") {
        c.series_prime_limit = parse_int(need_one(), line);
    } else if (key == "z2_u") {
        c.z2_u = parse_double(need_one(), line);
    } else if (key == "z2_prime_limits") {
        c.z2_prime_limits.clear();
        for (const auto& t : toks) c.z2_prime_limits.push_back(parse_int(t, line));
    } else if (key == "gauss_k_max") {
        c.gauss_k_max = parse_int(need_one(), line);
    } else if (key == "gauss_m_max") {
        c.gauss_m_max = parse_int(need_one(), line);
    } else {
        throw ConfigError("unknown key '" + key + "'", line);
    }
}

void validate(const ExperimentConfig& c) {
    for (double x : c.X_values)
        if (!(x >= 10.0)) throw ConfigError("X_values entries must be >= 10");
    if (!(c.W_a > 0.0) || !(c.W_b > c.W_a) || !(c.W_amplitude >= 0.0))
        throw ConfigError("W weight requires 0 < W_a < W_b and W_amplitude >= 0");
    if (!(c.Phi_a > 0.0) || !(c.Phi_b > c.Phi_a) || !(c.Phi_amplitude >= 0.0))
        throw ConfigError("Phi weight requires 0 < Phi_a < Phi_b and Phi_amplitude >= 0");
    if (!(c.quadrature.abs_tol > 0.0) || !(c.quadrature.rel_tol >= 0.0) ||
        c.quadrature.max_depth < 1)
        throw ConfigError("quadrature tolerances must be positive, max_depth >= 1");
    if (c.threads < 1) throw ConfigError("threads must be >= 1");
    if (c.prime_limit < 3 || c.series_prime_limit < 3)
        throw ConfigError("prime limits must be >= 3");
    if (c.poisson_n_max < 1) throw ConfigError("poisson_n_max must be >= 1");
    if (c.gauss_k_max < 1 || c.gauss_m_max < 0)
        throw ConfigError("gauss suite bounds must be positive");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig c;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line);
        apply(c, key, value, line);
    }
    validate(c);
    return c;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace qtl::config
