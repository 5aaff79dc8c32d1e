#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "qtl/weights.hpp"

using namespace qtl::weights;

namespace {

const QuadratureSpec kSpec{1e-13, 1e-13, 48};

// Composite Simpson oracle over the support, independent of the adaptive
// Gauss-Legendre path. 1e6 intervals is far past convergence for these
// integrands.
template <class F>
double simpson_oracle(const F& f, double lo, double hi, int intervals = 1'000'000) {
    const double h = (hi - lo) / intervals;
    double s = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i) s += f(lo + i * h) * ((i & 1) ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Frozen golden values, computed once with simpson_oracle (printed by the
// "freeze" subcase below, cross-checked against an independent run).
constexpr double kGoldenBumpIntegral = 7.0298584066093304e-03;   // canonical bump on (1,2)
constexpr double kGoldenBumpSquareIntegral = 9.6986641533576407e-05;  // its square

}  // namespace

TEST_CASE("bump weight shape") {
    const BumpWeight f(1.0, 2.0, 1.0);
    CHECK(f(0.5) == 0.0);
    CHECK(f(1.0) == 0.0);
    CHECK(f(2.0) == 0.0);
    CHECK(f(2.5) == 0.0);
    CHECK(f(1.5) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
    CHECK(f(1.25) > 0.0);
    CHECK(f(1.01) > 0.0);
    CHECK_THROWS_AS(BumpWeight(0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(BumpWeight(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BumpWeight(1.0, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("integrate: zero amplitude limit") {
    CHECK(integrate(BumpWeight(1.0, 2.0, 0.0), kSpec) == 0.0);
}

TEST_CASE("integrate matches the frozen Simpson golden value") {
    const BumpWeight f(1.0, 2.0, 1.0);
    const double oracle = simpson_oracle([&](double x) { return f(x); }, 1.0, 2.0);
    CHECK(std::abs(oracle - kGoldenBumpIntegral) < 1e-14);
    CHECK(std::abs(integrate(f, kSpec) - kGoldenBumpIntegral) < 1e-12);
}

TEST_CASE("integrate: translation invariance") {
    const double i12 = integrate(BumpWeight(1.0, 2.0, 1.0), kSpec);
    const double i34 = integrate(BumpWeight(3.0, 4.0, 1.0), kSpec);
    CHECK(std::abs(i12 - i34) < 1e-12);
}

TEST_CASE("integrate scales with amplitude") {
    const double one = integrate(BumpWeight(1.0, 2.0, 1.0), kSpec);
    const double five = integrate(BumpWeight(1.0, 2.0, 5.0), kSpec);
    CHECK(five == doctest::Approx(5.0 * one).epsilon(1e-13));
}

TEST_CASE("quadrature failure carries the best estimate") {
    const BumpWeight f(1.0, 2.0, 1.0);
    const QuadratureSpec strangled{1e-30, 0.0, 2};
    try {
        integrate(f, strangled);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::abs(e.best_estimate) > 0.0);
        CHECK(e.error_bound > 0.0);
    }
}

TEST_CASE("order consistency: halving tolerances stays within the bound") {
    const BumpWeight f(1.0, 2.0, 1.0);
    QuadratureSpec coarse{1e-8, 1e-8, 48};
    QuadratureSpec fine{5e-9, 5e-9, 48};
    const auto a = integrate_full(f, coarse);
    const auto b = integrate_full(f, fine);
    CHECK(std::abs(a.value - b.value) <= std::max(a.error_bound, 1e-15));
}

TEST_CASE("tilde transform at zero and parity") {
    const BumpWeight f(1.0, 2.0, 1.0);
    CHECK(tilde_transform(f, 0.0, kSpec) == doctest::Approx(integrate(f, kSpec)).epsilon(1e-13));

    // W~(xi) + W~(-xi) = 2 int cos(2 pi xi x) f(x) dx
    for (double xi : {0.7, 3.0, 11.5}) {
        const double plus = tilde_transform(f, xi, kSpec);
        const double minus = tilde_transform(f, -xi, kSpec);
        const double cos_moment =
            integrate_adaptive(
                [&](double x) { return std::cos(2.0 * M_PI * xi * x) * f(x); }, 1.0, 2.0, kSpec)
                .value;
        CHECK(plus + minus == doctest::Approx(2.0 * cos_moment).epsilon(1e-10));
    }
}

TEST_CASE("tilde transform decays fast") {
    const BumpWeight f(1.0, 2.0, 1.0);
    const double at10 = std::abs(tilde_transform(f, 10.0, kSpec));
    // measured decay constant: |W~(10)| = C * 1e-4 with C of order one
    const double C = at10 * 1e4;
    CHECK(C < 10.0);
    CHECK(at10 > 0.0);
    const double at40 = std::abs(tilde_transform(f, 40.0, kSpec));
    CHECK(at40 < 1e-3 * at10);
}

TEST_CASE("h1 product formula") {
    const BumpWeight w(1.0, 2.0, 1.0);
    const BumpWeight phi(1.0, 2.0, 1.0);
    const double iw = integrate(w, kSpec);

    // normalized weights give exactly 1
    const BumpWeight wn(1.0, 2.0, 1.0 / iw);
    const BumpWeight pn(1.0, 2.0, 1.0 / iw);
    CHECK(h1_tilde_11(wn, pn, kSpec) == doctest::Approx(1.0).epsilon(1e-11));

    // int W = 2, int Phi = 3 gives 2 * 3^2 = 18
    const BumpWeight w2(1.0, 2.0, 2.0 / iw);
    const BumpWeight p3(1.0, 2.0, 3.0 / iw);
    CHECK(h1_tilde_11(w2, p3, kSpec) == doctest::Approx(18.0).epsilon(1e-11));

    // canonical unnormalized bumps: product of frozen golden integrals
    CHECK(h1_tilde_11(w, phi, kSpec) ==
          doctest::Approx(kGoldenBumpIntegral * kGoldenBumpIntegral * kGoldenBumpIntegral)
              .epsilon(1e-11));
}

TEST_CASE("h1 diagonal form uses the square integral") {
    const BumpWeight w(1.0, 2.0, 1.0);
    const BumpWeight phi(1.0, 2.0, 1.0);
    const double oracle =
        simpson_oracle([&](double x) { const double v = phi(x); return v * v; }, 1.0, 2.0);
    CHECK(std::abs(oracle - kGoldenBumpSquareIntegral) < 1e-15);
    CHECK(h1_tilde_diagonal(w, phi, kSpec) ==
          doctest::Approx(kGoldenBumpIntegral * kGoldenBumpSquareIntegral).epsilon(1e-11));
}

// Run with `test_weights -sc freeze` to print oracle values for the frozen
// constants above.
TEST_CASE("freeze" * doctest::skip()) {
    const BumpWeight f(1.0, 2.0, 1.0);
    std::printf("bump integral        = %.17e\n",
                simpson_oracle([&](double x) { return f(x); }, 1.0, 2.0));
    std::printf("bump square integral = %.17e\n",
                simpson_oracle([&](double x) { const double v = f(x); return v * v; }, 1.0, 2.0));
}
