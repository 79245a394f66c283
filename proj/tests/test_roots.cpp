#include <doctest.h>

#include <cmath>

#include "commlip/errors.hpp"
#include "commlip/roots.hpp"

using namespace commlip;

TEST_SUITE("roots") {

TEST_CASE("brent finds the fixed point of cos")
{
    const auto r = brent_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, {1e-12, 1e-13});
    CHECK(r.x == doctest::Approx(0.7390851332151607).epsilon(1e-11));
    CHECK(r.iterations < 50);
}

TEST_CASE("brent handles a triple root")
{
    const double x = bracketed_root([](double t) { return std::pow(t - 2.0, 3); }, 0.0, 5.0, {1e-10, 1e-11});
    CHECK(std::abs(x - 2.0) < 1e-9);
}

TEST_CASE("bracket width ends below the tolerance")
{
    const double T = 1e-5;
    const auto r = brent_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, {T, 1e-10});
    CHECK(std::abs(r.x - std::sqrt(2.0)) < T);
    CHECK(r.bracket_width <= T / 10.0);
}

TEST_CASE("endpoint root is returned directly")
{
    CHECK(bracketed_root([](double x) { return x - 1.0; }, 1.0, 3.0) == 1.0);
}

TEST_CASE("argument errors")
{
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(brent_root(f, 1.0, 0.0), ArgumentOrder);
    CHECK_THROWS_AS(brent_root(f, 1.0, 2.0), NoSignChange);
    CHECK_THROWS_AS(brent_root(f, -1.0, 1.0, {0.0, 0.0}), BadParameter);
}

TEST_CASE("tolerance config")
{
    CHECK_NOTHROW(ToleranceConfig{}.validate());
    CHECK_THROWS_AS((ToleranceConfig{1e-10, 1e-5}.validate()), BadParameter);
    CHECK_THROWS_AS((ToleranceConfig{0.0, 0.0}.validate()), BadParameter);
}

}
