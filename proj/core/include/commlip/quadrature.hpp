#pragma once

#include <functional>

namespace commlip {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive 31-point Gauss-Kronrod over [lo, hi].
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol = 1e-10);

/// int_0^inf f(t) / sqrt(t) dt via t = u^2, which turns it into
/// 2 int_0^inf f(u^2) du and removes the endpoint singularity.
QuadratureResult integrate_inv_sqrt_half_line(const std::function<double(double)>& f,
                                              double abs_tol = 1e-10);

} // namespace commlip
