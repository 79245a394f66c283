#include "commlip/core_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "commlip/errors.hpp"

namespace commlip {

namespace {

constexpr int kMaxEndDoublings = 60;

std::string describe(double c, const GaussianParams& p)
{
    std::ostringstream out;
    out.precision(17);
    out << "(c=" << c << ", a=" << p.a << ", b=" << p.b << ")";
    return out.str();
}

} // namespace

bool GaussianParams::valid() const noexcept
{
    return a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b);
}

void GaussianParams::validate() const
{
    if (!valid()) {
        std::ostringstream msg;
        msg << "Gaussian parameters must be positive and finite (a=" << a << ", b=" << b << ")";
        throw DomainViolation(msg.str());
    }
}

double f1(double x)
{
    return x / (x + 1.0);
}

double erf(double x)
{
    return std::erf(x);
}

double g_erf(double x, const GaussianParams& p)
{
    return 0.5 * p.a * std::sqrt(std::numbers::pi / p.b) * commlip::erf(std::sqrt(p.b) * x);
}

double g_erf_limit(const GaussianParams& p)
{
    return 0.5 * p.a * std::sqrt(std::numbers::pi / p.b);
}

double j_func(double x, const GaussianParams& p)
{
    if (x == 0.0) return 0.0;
    return f1(x) - g_erf(x, p);
}

double j_prime(double x, const GaussianParams& p)
{
    const double s = x + 1.0;
    return 1.0 / (s * s) - p.a * std::exp(-p.b * x * x);
}

double j_infinity(const GaussianParams& p)
{
    return 1.0 - g_erf_limit(p);
}

double phi(double x, const GaussianParams& p)
{
    return p.b * x * x - 2.0 * std::log1p(x) - std::log(p.a);
}

double x_star(double b)
{
    // (-1 + sqrt(1 + 4/b)) / 2 rewritten to avoid cancellation for large b.
    const double r = std::sqrt(1.0 + 4.0 / b);
    return (2.0 / b) / (1.0 + r);
}

XEnd x_end(const GaussianParams& p)
{
    XEnd out;
    double radicand = 1.0 + p.b * std::log(p.a);
    if (radicand < 0.0) {
        radicand = 0.0;
        out.radicand_clamped = true;
    }
    out.x = (1.0 + std::sqrt(radicand)) / p.b;
    while (!(phi(out.x, p) > 0.0)) {
        if (out.doublings == kMaxEndDoublings) {
            throw DomainViolation("x_end: Phi stayed non-positive after 60 doublings");
        }
        out.x *= 2.0;
        ++out.doublings;
    }
    return out;
}

ErfMinOutcome erf_min_bound(double c, const GaussianParams& p, const ToleranceConfig& tol)
{
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainViolation("erf_min_bound: c must be positive");
    }
    p.validate();
    tol.validate();

    const double T = tol.root_tol;
    const double Tf = tol.comp_tol;

    ErfMinOutcome out;
    out.error_budget = 2.0 * (1.0 + p.a) * T;

    const double xs = x_star(p.b);
    if (phi(xs, p) >= 0.0) {
        out.degenerate = true;
        out.value = kDegenerateValue;
        return out;
    }

    const auto phi_p = [&p](double x) { return phi(x, p); };

    const XEnd xe = x_end(p);
    out.x_end_adjusted = xe.radicand_clamped || xe.doublings > 0;

    const double x2 = bracketed_root(phi_p, xs, xe.x, tol);
    if (x2 - T < Tf) {
        throw DomainViolation("right root too close to 0 " + describe(c, p));
    }
    if (!(j_prime(x2 - T, p) <= -Tf && j_prime(x2 + T, p) >= Tf)) {
        throw RootValidationFailed("right root failed the sign check " + describe(c, p));
    }
    out.root_right = x2;

    const double j_inf = j_infinity(p);
    const double j2 = j_func(x2, p);

    // j(0) = 0 exactly.
    if (p.a < 1.0) {
        const double x1 = bracketed_root(phi_p, 0.0, xs, tol);
        if (x1 - T < Tf) {
            throw DomainViolation("left root too close to 0 " + describe(c, p));
        }
        if (!(j_prime(x1 - T, p) >= Tf && j_prime(x1 + T, p) <= -Tf)) {
            throw RootValidationFailed("left root failed the sign check " + describe(c, p));
        }
        out.root_left = x1;
        out.oscillation = std::max(j_func(x1, p), j_inf) - std::min(0.0, j2);
    } else {
        out.oscillation = std::max(0.0, j_inf) - j2;
    }

    out.value = (out.oscillation + out.error_budget + c * p.a) / f1(c);
    return out;
}

} // namespace commlip
