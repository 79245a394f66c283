#include "commlip/quadrature.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "commlip/errors.hpp"

namespace commlip {

namespace {
constexpr unsigned kMaxDepth = 30;
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol)
{
    if (!(abs_tol > 0.0)) throw BadParameter("quadrature tolerance must be positive");
    QuadratureResult r;
    // Boost's tolerance is relative; the integrands used here are O(1).
    r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, lo, hi, kMaxDepth, abs_tol, &r.error_estimate);
    return r;
}

QuadratureResult integrate_inv_sqrt_half_line(const std::function<double(double)>& f,
                                              double abs_tol)
{
    const auto g = [&f](double u) { return u == 0.0 ? 2.0 * f(0.0) : 2.0 * f(u * u); };
    return integrate(g, 0.0, std::numeric_limits<double>::infinity(), abs_tol);
}

} // namespace commlip
