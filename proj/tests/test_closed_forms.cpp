#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "commlip/closed_forms.hpp"
#include "commlip/core_approx.hpp"
#include "commlip/errors.hpp"
#include "commlip/quadrature.hpp"

using namespace commlip;

TEST_SUITE("closed_forms") {

TEST_CASE("trivial bound")
{
    CHECK(trivial_ratio(1.0) == 2.0);
    CHECK(trivial_ratio(1e-9) == doctest::Approx(1.0));
    CHECK(trivial_ratio(3.0) == doctest::Approx(4.0 / 3.0));
    CHECK(trivial_constant() == 2.0);
    double best = 0.0;
    for (int k = 1; k < 40000; ++k) best = std::max(best, trivial_ratio(k * 1e-4));
    CHECK(best == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("shift bound")
{
    CHECK(shift_bound_e(2.0 / 3.0) / f1(2.0 / 3.0) == doctest::Approx(1.5625).epsilon(1e-15));
    CHECK(shift_bound_e(0.5) == 0.5);
    CHECK(shift_bound_e(0.5 - 1e-12) == doctest::Approx(0.5));
    CHECK(shift_constant() == 1.5625);
    double best = 0.0;
    for (int k = 1; k <= 200000; ++k) {
        const double c = k * 1e-4;
        best = std::max(best, shift_bound_e(c) / f1(c));
    }
    CHECK(std::abs(best - 1.5625) <= 1e-6);
}

TEST_CASE("gamma formulas at r = 1/2")
{
    CHECK(gamma_boyadzhiev(0.5) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(gamma_olsen_pedersen(0.5) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    CHECK(gamma_pedersen(0.5) == doctest::Approx(std::pow(2.0, 1.5) * std::pow(3.0, -0.75)).epsilon(1e-15));
    CHECK(gamma_pedersen(0.5) < 1.2409);
    CHECK(gamma_tangent(0.5) == doctest::Approx(1.5 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(gamma_tangent(0.5) < 1.0607);
    // (2/pi)(s + 1/s) at s = 1
    CHECK((2.0 / std::numbers::pi) * 2.0 == doctest::Approx(gamma_boyadzhiev(0.5)));
}

TEST_CASE("ordering at r = 1/2")
{
    CHECK(gamma_tangent(0.5) < gamma_pedersen(0.5));
    CHECK(gamma_pedersen(0.5) < gamma_boyadzhiev(0.5));
    CHECK(gamma_boyadzhiev(0.5) < gamma_olsen_pedersen(0.5));
}

TEST_CASE("gamma formulas over r")
{
    double ped = 0.0;
    double tan = 0.0;
    for (int k = 1; k < 10000; ++k) {
        const double r = k * 1e-4;
        CAPTURE(r);
        REQUIRE(gamma_boyadzhiev(r) >= 1.0);
        REQUIRE(gamma_olsen_pedersen(r) >= 1.0);
        REQUIRE(gamma_pedersen(r) >= 1.0);
        REQUIRE(gamma_tangent(r) >= 1.0);
        ped = std::max(ped, gamma_pedersen(r));
        tan = std::max(tan, gamma_tangent(r));
    }
    CHECK(ped <= 1.25);
    CHECK(tan < 1.062);
    CHECK(gamma_boyadzhiev(1.0 - 1e-7) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gamma_tangent(1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(gamma_tangent(1.0 - 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(gamma_pedersen(1.0), DomainViolation);
    CHECK_THROWS_AS(gamma_tangent(0.0), DomainViolation);
}

TEST_CASE("tangent objective is stationary at a = 2")
{
    for (double r : {0.1, 0.5, 0.9}) {
        const double h = 1e-5;
        const double d = (tangent_objective(r, 2 + h) - tangent_objective(r, 2 - h)) / (2 * h);
        CHECK(std::abs(d) < 1e-10);
        CHECK(tangent_objective(r, 2.0) == doctest::Approx(gamma_tangent(r)).epsilon(1e-15));
        CHECK(tangent_objective(r, 1.5) > gamma_tangent(r));
    }
}

TEST_CASE("sin minimisation")
{
    const auto s = gamma_sin(0.5);
    CHECK(s.value <= 1.1748);
    CHECK(std::abs(s.argmin - 1.166) < 0.005);
    for (double dt : {-0.01, -0.001, 0.001, 0.01}) {
        CHECK(s.value <= std::pow(s.argmin + dt, 0.5) / std::sin(s.argmin + dt));
    }
    for (int k = 1; k < 100; ++k) {
        const double r = k / 100.0;
        REQUIRE(gamma_sin(r).value <= csc1() + 1e-15);
    }
}

TEST_CASE("csc(1)")
{
    CHECK(csc1() < 1.1884);
    CHECK(csc1() == 1.0 / std::sin(1.0));
    CHECK(csc1() >= 1.0);
}

TEST_CASE("piecewise quadratic for sqrt")
{
    const PiecewiseQuadParams p{8.0, -0.03314563};
    CHECK(pq_sqrt_bound(p) <= 1.02259);
    // dense sampling of j without the t* formula, 30 digits
    CHECK(pq_sqrt_bound(p) == doctest::Approx(1.02258418472521).epsilon(1e-12));
    CHECK(pq_sqrt_bound({2.0, -0.1}) == doctest::Approx(1.10191568404391).epsilon(1e-12));
    CHECK(pq_sqrt_t_star({3.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
    const double t = pq_sqrt_t_star(p);
    CHECK(t > 0.0);
    CHECK(t < p.a);
    // j' vanishes at t*
    const auto j = [&p](double x) { return std::sqrt(x) - pq_sqrt_g(x, p); };
    CHECK(std::abs((j(t + 1e-6) - j(t - 1e-6)) / 2e-6) < 1e-8);
    CHECK_THROWS_AS(pq_sqrt_bound({1.0, 0.1}), DomainViolation);
}

TEST_CASE("piecewise quadratic for sqrt is at least 1")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> la(-2.0, 2.0), lm(-4.0, 0.0);
    for (int i = 0; i < 500; ++i) {
        const PiecewiseQuadParams p{std::pow(10.0, la(rng)), -std::pow(10.0, lm(rng))};
        REQUIRE(pq_sqrt_bound(p) >= 1.0);
    }
}

TEST_CASE("piecewise quadratic for f1")
{
    // dense sampling of j, 30 digits
    CHECK(pq_f1_bound(0.25, {1.5, -0.2}) == doctest::Approx(1.11644889496792).epsilon(1e-12));
    CHECK(pq_f1_bound(1.0, {0.8, 0.0}) == doctest::Approx(1.34156378600823).epsilon(1e-12));
    CHECK(pq_f1_bound(3.0, {2.0, -0.05}) == doctest::Approx(1.70874360895749).epsilon(1e-12));
    // with m = 0 and a -> inf the approximant flattens and the bound tends to 1/f1(c)
    CHECK(pq_f1_bound(0.7, {1e7, 0.0}) == doctest::Approx(1.0 / f1(0.7)).epsilon(1e-5));
}

TEST_CASE("t* of the f1 quadratic is where g meets f1 in slope")
{
    for (const PiecewiseQuadParams p : {PiecewiseQuadParams{1.5, -0.2}, PiecewiseQuadParams{0.6, -2.0},
                                        PiecewiseQuadParams{4.0, -0.01}}) {
        const double t = pq_f1_t_star(p);
        const double h = 1e-6;
        const double gp = (pq_f1_g(t + h, p) - pq_f1_g(t - h, p)) / (2 * h);
        CHECK(gp == doctest::Approx(1.0 / ((t + 1) * (t + 1))).epsilon(1e-7));
    }
}

TEST_CASE("free slope offset never hurts")
{
    const auto grid = build_uniform_grid(0.05, 0.25, 10.05);
    const auto nodes = pq_f1_optimize_grid(grid);
    REQUIRE(nodes.size() == grid.size());
    for (const auto& n : nodes) {
        CAPTURE(n.c);
        CHECK(n.params.m <= 0.0);
        CHECK(n.value == pq_f1_bound(n.c, n.params));
        CHECK(n.value >= 1.0);
        double best_m0 = 1e300;
        for (int k = -200; k <= 300; ++k) {
            best_m0 = std::min(best_m0, pq_f1_bound(n.c, {std::pow(10.0, k / 100.0), 0.0}));
        }
        CHECK(n.value <= best_m0 + 1e-9);
    }
}

TEST_CASE("lifted constant over a grid")
{
    const std::vector<PqNode> nodes{{1.0, 1.01, {}}, {1.01, 1.01, {}}};
    CHECK(pq_f1_lifted_constant(nodes) == doctest::Approx(1.01 * 2.01 / 2.0));
    CHECK_THROWS_AS(pq_f1_lifted_constant({}), BadParameter);
}

TEST_CASE("simple and Cayley bounds")
{
    CHECK(simple_Ct(1.0) == 2.0);
    CHECK(scaled_cayley_Cc(2.0 / 3.0) == doctest::Approx(1.25).epsilon(1e-15));
    double best = 0.0;
    double arg = 0.0;
    for (int k = 1; k <= 100000; ++k) {
        const double c = k * 1e-4;
        const double v = scaled_cayley_Cc(c);
        if (v > best) {
            best = v;
            arg = c;
        }
        REQUIRE(v <= std::min(c + 1.0, (c + 1.0) / c) + 1e-15);
        if (c < 0.268 || c > 1.701) REQUIRE(v < csc1());
    }
    CHECK(best == doctest::Approx(1.25).epsilon(1e-9));
    CHECK(std::abs(arg - 2.0 / 3.0) < 2e-4);
    const double t = scaled_cayley_t(2.0 / 3.0);
    CHECK(t == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("Loring-Vides thresholds")
{
    CHECK(lv_threshold(LvFamily::power, 0.5, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(lv_threshold(LvFamily::shifted_sqrt, 1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> lx(-3.0, 3.0), r(0.01, 0.99);
    for (int i = 0; i < 1000; ++i) {
        const double x = std::pow(10.0, lx(rng));
        REQUIRE(lv_threshold(LvFamily::power, r(rng), x) < x);
        REQUIRE(lv_threshold(LvFamily::shifted_sqrt, std::pow(10.0, lx(rng)), x) < x);
    }
    CHECK_THROWS_AS(lv_threshold(LvFamily::power, 1.0, 1.0), DomainViolation);
}

TEST_CASE("half-line quadrature normalisation")
{
    const auto r = integrate_inv_sqrt_half_line([](double t) { return 1.0 / (1.0 + t); }, 1e-12);
    CHECK(r.value / std::numbers::pi == doctest::Approx(1.0).epsilon(1e-10));
    const auto g = integrate([](double x) { return std::exp(-x); }, 0.0, 1.0);
    CHECK(g.value == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
}

}
