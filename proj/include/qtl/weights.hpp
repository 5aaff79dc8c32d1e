#pragma once
// Smooth compactly supported bump weights on (0, inf) and their transforms.
//
// The canonical family is amplitude * exp(-1/(x-a) - 1/(b-x)) on (a, b),
// identically zero outside. All derivatives vanish at the endpoints, so a
// fixed-order Gauss-Legendre panel rule with adaptive bisection needs no
// endpoint treatment.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qtl::weights {

class BumpWeight {
public:
    // amplitude = 0 is allowed and gives the zero function.
    BumpWeight(double a, double b, double amplitude = 1.0) : a_(a), b_(b), amplitude_(amplitude) {
        if (!(a > 0.0)) throw std::invalid_argument("BumpWeight: left endpoint must be positive");
        if (!(b > a)) throw std::invalid_argument("BumpWeight: need b > a");
        if (!(amplitude >= 0.0)) throw std::invalid_argument("BumpWeight: amplitude must be non-negative");
    }

    double operator()(double x) const noexcept {
        if (x <= a_ || x >= b_) return 0.0;
        return amplitude_ * std::exp(-1.0 / (x - a_) - 1.0 / (b_ - x));
    }

    double left() const noexcept { return a_; }
    double right() const noexcept { return b_; }
    double amplitude() const noexcept { return amplitude_; }

private:
    double a_, b_, amplitude_;
};

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 48;
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;  // accumulated panel-halving estimates
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<std::array<double, 2>, 15> kGL15{{
    {-0.98799251802048538, 0.030753241996118647},
    {-0.93727339240070595, 0.070366047488108069},
    {-0.84820658341042721, 0.10715922046717177},
    {-0.72441773136017007, 0.13957067792615391},
    {-0.57097217260853883, 0.16626920581699378},
    {-0.39415134707756339, 0.18616100001556188},
    {-0.20119409399743451, 0.19843148532711125},
    {0.0, 0.2025782419255609},
    {0.20119409399743451, 0.19843148532711125},
    {0.39415134707756339, 0.18616100001556188},
    {0.57097217260853883, 0.16626920581699378},
    {0.72441773136017007, 0.13957067792615391},
    {0.84820658341042721, 0.10715922046717177},
    {0.93727339240070595, 0.070366047488108069},
    {0.98799251802048538, 0.030753241996118647},
}};

template <class F>
double gl15_panel(const F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double s = 0.0;
    for (const auto& [x, w] : kGL15) s += w * f(c + h * x);
    return s * h;
}

template <class F>
struct AdaptiveState {
    const F& f;
    const QuadratureSpec& spec;
    double err_accum = 0.0;

    double run(double lo, double hi, double whole, double tol, int depth) {
        const double mid = 0.5 * (lo + hi);
        const double left = gl15_panel(f, lo, mid);
        const double right = gl15_panel(f, mid, hi);
        const double refined = left + right;
        const double disc = std::abs(refined - whole);
        if (disc <= std::max(tol, spec.rel_tol * std::abs(refined))) {
            err_accum += disc;
            return refined;
        }
        if (depth >= spec.max_depth) {
            err_accum += disc;
            throw QuadratureError("adaptive quadrature: tolerance not reached within max_depth",
                                  refined, disc);
        }
        return run(lo, mid, left, 0.5 * tol, depth + 1) + run(mid, hi, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace detail

// Adaptive bisection with a fixed GL15 panel. Deterministic for a fixed spec.
// Throws QuadratureError (carrying the best estimate and its bound) if the
// tolerance cannot be met within spec.max_depth.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double lo, double hi, const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol >= 0.0) || spec.max_depth < 1)
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive, max_depth >= 1");
    if (!(hi > lo)) return QuadratureResult{0.0, 0.0};
    detail::AdaptiveState<F> state{f, spec};
    double whole = detail::gl15_panel(f, lo, hi);
    double value;
    try {
        value = state.run(lo, hi, whole, spec.abs_tol, 0);
    } catch (QuadratureError& e) {
        e.error_bound += state.err_accum;
        throw;
    }
    return QuadratureResult{value, state.err_accum};
}

// Integral of the weight over its support.
double integrate(const BumpWeight& f, const QuadratureSpec& spec);
QuadratureResult integrate_full(const BumpWeight& f, const QuadratureSpec& spec);

// F~(xi) = int (cos(2 pi xi x) + sin(2 pi xi x)) F(x) dx over the support.
double tilde_transform(const BumpWeight& f, double xi, const QuadratureSpec& spec);

// Separable product functional int W * (int Phi)^2.
double h1_tilde_11(const BumpWeight& w, const BumpWeight& phi, const QuadratureSpec& spec);

// Diagonal second-moment functional int W * int Phi^2. This is the weight
// constant the empirical mean square converges to; see meansquare::main_term.
double h1_tilde_diagonal(const BumpWeight& w, const BumpWeight& phi, const QuadratureSpec& spec);

}  // namespace qtl::weights
