#include "commlip/roots.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "commlip/errors.hpp"

namespace commlip {

void ToleranceConfig::validate() const
{
    if (!(comp_tol > 0.0) || !(root_tol > comp_tol) || !std::isfinite(root_tol)) {
        std::ostringstream msg;
        msg << "tolerances must satisfy 0 < T_f < T (got T=" << root_tol << ", T_f=" << comp_tol
            << ")";
        throw BadParameter(msg.str());
    }
}

RootResult brent_root(const std::function<double(double)>& fun, double lo, double hi,
                      const ToleranceConfig& tol)
{
    tol.validate();
    if (!(lo < hi)) {
        throw ArgumentOrder("bracketed_root: need lo < hi");
    }

    double a = lo;
    double b = hi;
    double fa = fun(a);
    double fb = fun(b);
    if (fa == 0.0) return {a, 0, 0.0};
    if (fb == 0.0) return {b, 0, 0.0};
    if (!(fa * fb < 0.0)) {
        std::ostringstream msg;
        msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << fa << ", f(hi)=" << fb;
        throw NoSignChange(msg.str());
    }

    // Half of the T/10 window: the loop exits once |c - b| <= 2 * tol1.
    const double window = tol.root_tol / 20.0;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;

    int iter = 0;
    for (; iter < kBrentMaxIterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        const double tol1 = 2.0 * eps * std::abs(b) + window;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol1 || fb == 0.0) {
            break;
        }

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic interpolation, or secant when a == c
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }

        a = b;
        fa = fb;
        if (std::abs(d) > tol1) {
            b += d;
        } else {
            b += (m > 0.0 ? tol1 : -tol1);
        }
        fb = fun(b);
    }

    return {b, iter, std::abs(c - b)};
}

double bracketed_root(const std::function<double(double)>& fun, double lo, double hi,
                      const ToleranceConfig& tol)
{
    return brent_root(fun, lo, hi, tol).x;
}

} // namespace commlip
