#include "commlip/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "commlip/core_approx.hpp"
#include "commlip/errors.hpp"

namespace commlip {

namespace {

void check_open_unit(double r, const char* what)
{
    if (!(r > 0.0 && r < 1.0)) throw DomainViolation(std::string(what) + ": r must lie in (0, 1)");
}

void check_positive(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainViolation(std::string(what) + ": argument must be positive");
}

} // namespace

double trivial_ratio(double c)
{
    check_positive(c, "trivial_ratio");
    return std::min(c, 1.0) / f1(c);
}

double trivial_constant() { return 2.0; }

double shift_bound_e(double c)
{
    check_positive(c, "shift_bound_e");
    return c < 0.5 ? c : 1.0 - 1.0 / (4.0 * c);
}

double shift_constant()
{
    // Below c = 1/2 the ratio is c + 1 < 3/2. Above it, with u = 1/c in (0, 2],
    // the ratio is (1 - u/4)(1 + u) = 1 + 3u/4 - u^2/4, peaking at u = 3/2.
    constexpr double u = 1.5;
    return 1.0 + 0.75 * u - 0.25 * u * u;
}

double gamma_boyadzhiev(double r)
{
    check_open_unit(r, "gamma_boyadzhiev");
    return std::sin(std::numbers::pi * r) / (std::numbers::pi * r * (1.0 - r));
}

double gamma_olsen_pedersen(double r)
{
    check_open_unit(r, "gamma_olsen_pedersen");
    return std::pow(1.0 - r, r - 1.0);
}

double gamma_pedersen(double r)
{
    check_open_unit(r, "gamma_pedersen");
    return std::pow(2.0, r) * std::pow(1.0 - r, -0.5 * (1.0 - r)) * std::pow(1.0 + r, -0.5 * (1.0 + r));
}

double gamma_tangent(double r)
{
    check_open_unit(r, "gamma_tangent");
    return (2.0 - r) * std::pow(2.0, r - 1.0);
}

double tangent_objective(double r, double a)
{
    check_open_unit(r, "tangent_objective");
    check_positive(a, "tangent_objective");
    return (2.0 - r) * (0.5 * (1.0 - r) * std::pow(a, r) + r * std::pow(a, r - 1.0));
}

SinMinimum gamma_sin(double r)
{
    check_open_unit(r, "gamma_sin");
    // log(t^r / sin t) is convex on (0, pi), so golden section is safe.
    const auto f = [r](double t) { return std::pow(t, r) / std::sin(t); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0;
    double hi = std::numbers::pi;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1v = f(x1);
    double f2v = f(x2);
    while (hi - lo > 1e-10) {
        if (f1v < f2v) {
            hi = x2;
            x2 = x1;
            f2v = f1v;
            x1 = hi - inv_phi * (hi - lo);
            f1v = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1v = f2v;
            x2 = lo + inv_phi * (hi - lo);
            f2v = f(x2);
        }
    }
    const double t = 0.5 * (lo + hi);
    return {f(t), t};
}

double csc1() { return 1.0 / std::sin(1.0); }

void PiecewiseQuadParams::validate() const
{
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainViolation("piecewise quadratic: a must be positive");
    if (!(m <= 0.0)) throw DomainViolation("piecewise quadratic: m must be <= 0");
}

double pq_sqrt_g(double x, const PiecewiseQuadParams& p)
{
    p.validate();
    const double a = p.a;
    if (x >= a) return std::sqrt(x);
    const double curv = -0.25 * std::pow(a, -1.5) + p.m; // F'(a) + m
    const double d = x - a;
    return 0.5 * curv * d * d + 0.5 / std::sqrt(a) * d + std::sqrt(a);
}

double pq_sqrt_t_star(const PiecewiseQuadParams& p)
{
    p.validate();
    const double root = -1.0 + std::sqrt(1.0 + 8.0 / (1.0 - 4.0 * p.m * std::pow(p.a, 1.5)));
    return 0.25 * p.a * root * root;
}

double pq_sqrt_bound(const PiecewiseQuadParams& p)
{
    const double t = pq_sqrt_t_star(p);
    const auto j = [&p](double x) { return std::sqrt(x) - pq_sqrt_g(x, p); };
    const double g0 = 0.75 / std::sqrt(p.a) - p.m * p.a;
    return j(t) - std::min(j(0.0), 0.0) + g0;
}

double pq_f1_g(double x, const PiecewiseQuadParams& p)
{
    p.validate();
    const double a1 = p.a + 1.0;
    if (x >= p.a) return f1(x);
    const double s = -2.0 / (a1 * a1 * a1) + p.m;
    const double d = x - p.a;
    return 0.5 * s * d * d + d / (a1 * a1) + p.a / a1;
}

double pq_f1_t_star(const PiecewiseQuadParams& p)
{
    p.validate();
    const double a1 = p.a + 1.0;
    const double q = p.m * a1 * a1 * a1;
    return -1.0 + a1 * (1.0 + std::sqrt(9.0 - 4.0 * q)) / (4.0 - 2.0 * q);
}

double pq_f1_bound(double c, const PiecewiseQuadParams& p)
{
    check_positive(c, "pq_f1_bound");
    const double t = pq_f1_t_star(p);
    const auto j = [&p](double x) { return f1(x) - pq_f1_g(x, p); };
    const double j0 = j(0.0);
    const double osc = t > 0.0 ? j(t) - std::min(j0, 0.0) : j0;
    const double a1 = p.a + 1.0;
    const double g0 = p.a * (2.0 / (a1 * a1 * a1) - p.m) + 1.0 / (a1 * a1);
    return (osc + c * g0) / f1(c);
}

std::vector<PqNode> pq_f1_optimize_grid(const std::vector<double>& grid, PatternSearchConfig cfg)
{
    // Search on (a, -m) so both coordinates share the lower-bound clamp.
    cfg.lower_bounds = {1e-8, 0.0};
    std::vector<PqNode> nodes;
    nodes.reserve(grid.size());
    Point2 start{1.0, 0.0};
    for (const double c : grid) {
        check_positive(c, "pq_f1_optimize_grid");
        const auto objective = [c](const Point2& x) {
            return pq_f1_bound(c, PiecewiseQuadParams{x[0], -x[1]});
        };
        auto res = pattern_search(objective, start, cfg);
        for (int r = 0; r < 2; ++r) {
            const auto again = pattern_search(objective, res.x, cfg);
            if (!(again.value < res.value)) break;
            res = again;
        }
        nodes.push_back({c, res.value, {res.x[0], -res.x[1]}});
        start = res.x;
    }
    return nodes;
}

double pq_f1_lifted_constant(const std::vector<PqNode>& nodes)
{
    if (nodes.empty()) throw BadParameter("pq_f1_lifted_constant: no nodes");
    double delta = 0.0;
    for (std::size_t k = 1; k < nodes.size(); ++k) delta = std::max(delta, nodes[k].c - nodes[k - 1].c);
    double best = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double next = k + 1 < nodes.size() ? nodes[k + 1].c : nodes[k].c + delta;
        best = std::max(best, nodes[k].value * (next + 1.0) / (nodes[k].c + 1.0));
    }
    return best;
}

double simple_Ct(double t)
{
    check_positive(t, "simple_Ct");
    return std::min(t + 1.0, (t + 1.0) / t);
}

double scaled_cayley_Cc(double c)
{
    check_positive(c, "scaled_cayley_Cc");
    return (c + 1.0) / (0.5 + std::sqrt(0.25 + c * c));
}

double scaled_cayley_t(double c)
{
    check_positive(c, "scaled_cayley_t");
    return (-1.0 + std::sqrt(1.0 + 4.0 * c * c)) / (2.0 * c);
}

double lv_threshold(LvFamily family, double param, double x)
{
    check_positive(x, "lv_threshold");
    switch (family) {
    case LvFamily::shifted_sqrt:
        check_positive(param, "lv_threshold");
        return std::sqrt(param) * std::sqrt(x + param) - param;
    case LvFamily::power:
        check_open_unit(param, "lv_threshold");
        return std::pow(param, 1.0 / (1.0 - param)) * x;
    }
    throw BadParameter("lv_threshold: unknown family");
}

} // namespace commlip
