#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qtl/gauss.hpp"
#include "qtl/poisson.hpp"
#include "qtl/weights.hpp"

using namespace qtl;
using weights::BumpWeight;
using weights::QuadratureSpec;

namespace {
const QuadratureSpec kSpec{1e-12, 1e-12, 48};
const BumpWeight kW{1.0, 2.0, 1.0};
}  // namespace

TEST_CASE("lhs: trivial character enumerates the window") {
    // n = 1: every odd d in (10, 20) contributes W(d/10)
    double expected = 0.0;
    for (std::int64_t d : {11, 13, 15, 17, 19}) expected += kW(d / 10.0);
    CHECK(poisson::poisson_lhs(1, 10.0, kW) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("lhs: character values weight the terms") {
    // n = 3: d = 15 drops since (15|3) = 0
    double expected = 0.0;
    expected += -kW(11 / 10.0);  // (11|3) = (2|3) = -1
    expected += kW(13 / 10.0);   // (13|3) = (1|3) = 1
    expected += -kW(17 / 10.0);  // (17|3) = (2|3) = -1
    expected += kW(19 / 10.0);   // (19|3) = (1|3) = 1
    CHECK(poisson::poisson_lhs(3, 10.0, kW) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("lhs: empty support") {
    CHECK(poisson::poisson_lhs(7, 0.3, kW) == 0.0);  // X*b < 1: no integer d
}

TEST_CASE("lhs argument guards") {
    CHECK_THROWS_AS(poisson::poisson_lhs(2, 10.0, kW), std::invalid_argument);
    CHECK_THROWS_AS(poisson::poisson_lhs(0, 10.0, kW), std::invalid_argument);
    CHECK_THROWS_AS(poisson::poisson_lhs(3, 0.0, kW), std::invalid_argument);
}

TEST_CASE("rhs: n = 1 reduces to classical Poisson over odd integers") {
    const double lhs = poisson::poisson_lhs(1, 10.0, kW);
    const auto rhs = poisson::poisson_rhs(1, 10.0, kW, kSpec);
    CHECK(std::abs(lhs - rhs.value) < 1e-8);
    CHECK(rhs.k_terms >= 8);
}

TEST_CASE("k = 0 term of the dual sum") {
    // n = 9: (X/18)(2|9) G_0(9) W~(0) = (X/18) * 6 * int W, and W~(0) = int W
    const double X = 10.0;
    const double int_w = weights::integrate(kW, kSpec);
    const double g0 = gauss::gauss_fast({0, 9}).to_double();
    const double term0 = X / 18.0 * g0 * weights::tilde_transform(kW, 0.0, kSpec);
    CHECK(g0 == 6.0);
    CHECK(term0 == doctest::Approx(X / 18.0 * 6.0 * int_w).epsilon(1e-13));
    // n = 3: G_0(3) = 0, the k = 0 term vanishes
    CHECK(gauss::gauss_fast({0, 3}).to_double() == 0.0);
}

TEST_CASE("identity on a small grid") {
    for (std::int64_t n : {1, 5, 9, 15, 21}) {
        for (double X : {10.0, 25.0}) {
            const auto lhs = poisson::poisson_lhs_detail(n, X, kW);
            const auto rhs = poisson::poisson_rhs(n, X, kW, kSpec);
            const double scale = std::max(std::abs(lhs.value), 1e-3 * lhs.gross);
            CHECK(std::abs(lhs.value - rhs.value) / scale < 1e-6);
        }
    }
}

TEST_CASE("truncation soundness: doubling K is quiescent") {
    for (std::int64_t n : {1, 9, 33}) {
        const auto base = poisson::poisson_rhs(n, 10.0, kW, kSpec);
        const auto doubled = poisson::poisson_rhs(n, 10.0, kW, kSpec, 2 * base.k_terms);
        CHECK(std::abs(base.value - doubled.value) < kSpec.abs_tol);
    }
}

TEST_CASE("verify_poisson report shape and residuals") {
    const auto rows = poisson::verify_poisson(15, {10.0, 25.0}, kW, kSpec);
    CHECK(rows.size() == 16);  // 8 odd n, 2 X each
    CHECK(rows[0].n == 1);
    CHECK(rows[0].X == 10.0);
    CHECK(rows[1].X == 25.0);
    CHECK(rows[2].n == 3);
    for (const auto& r : rows) {
        CHECK(r.rel_err < 1e-6);
        CHECK(r.k_terms_used > 0);
    }
}

TEST_CASE("verify_poisson: empty X list") {
    CHECK(poisson::verify_poisson(9, {}, kW, kSpec).empty());
}

TEST_CASE("csv serialization") {
    const auto rows = poisson::verify_poisson(3, {10.0}, kW, kSpec);
    std::ostringstream os;
    poisson::write_csv(os, rows);
    const std::string text = os.str();
    CHECK(text.rfind("n,X,lhs,rhs,rel_err,k_terms_used\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);  // header + 2 rows
}
