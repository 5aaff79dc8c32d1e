#include "qtl/weights.hpp"

#include <numbers>

namespace qtl::weights {

QuadratureResult integrate_full(const BumpWeight& f, const QuadratureSpec& spec) {
    if (f.amplitude() == 0.0) return QuadratureResult{0.0, 0.0};
    return integrate_adaptive([&f](double x) { return f(x); }, f.left(), f.right(), spec);
}

double integrate(const BumpWeight& f, const QuadratureSpec& spec) {
    return integrate_full(f, spec).value;
}

double tilde_transform(const BumpWeight& f, double xi, const QuadratureSpec& spec) {
    if (f.amplitude() == 0.0) return 0.0;
    const double two_pi_xi = 2.0 * std::numbers::pi * xi;
    auto integrand = [&f, two_pi_xi](double x) {
        return (std::cos(two_pi_xi * x) + std::sin(two_pi_xi * x)) * f(x);
    };
    return integrate_adaptive(integrand, f.left(), f.right(), spec).value;
}

double h1_tilde_11(const BumpWeight& w, const BumpWeight& phi, const QuadratureSpec& spec) {
    const double iw = integrate(w, spec);
    const double ip = integrate(phi, spec);
    return iw * ip * ip;
}

double h1_tilde_diagonal(const BumpWeight& w, const BumpWeight& phi, const QuadratureSpec& spec) {
    const double iw = integrate(w, spec);
    const double ip2 =
        integrate_adaptive([&phi](double x) { double v = phi(x); return v * v; },
                           phi.left(), phi.right(), spec)
            .value;
    return iw * ip2;
}

}  // namespace qtl::weights
