#pragma once

#include <vector>

#include "commlip/optimizer.hpp"

namespace commlip {

struct StitchedCertificate {
    std::vector<BoundPoint> points;
    std::vector<double> lifted; // D_k, one per point
    double corner_small = 0.0;
    double corner_large = 0.0;
    double global_C = 0.0;
    double delta_c = 0.0;       // spacing used past the last node
};

/// C (d + 1) / (c + 1): a constant valid at c stays valid at every d >= c
/// after this scaling.
double continuity_lift(double C, double c, double d);

/// Lifts each C_k over [c_k, c_{k+1}], with c_{n+1} = c_n + max spacing.
/// Corner fields are left at zero and global_C is max_k D_k.
StitchedCertificate stitch(const std::vector<BoundPoint>& points);

/// sup over (0, c1] of c / f1(c) = c1 + 1.
double corner_small(double c1);

/// sup over [cn, inf) of (1 - 1/(4c)) / f1(c); needs cn >= 1/2.
double corner_large(double cn);

/// stitch() plus both corners. The first and last nodes must sit at c1, cn.
StitchedCertificate global_constant(const std::vector<BoundPoint>& points, double c1, double cn);

/// Constant for ||[A^{1/2}, X]|| from the integral representation
/// A^{1/2} = (1/pi) int_0^inf A (A + t)^{-1} t^{-1/2} dt, with C(t) replaced by
/// 1 outside [c1, cn] and by the step function C_k inside.
double sqrt_constant(const std::vector<BoundPoint>& points, double c1, double cn);

/// (1/pi) int_0^inf min(csc 1, (t+1) / (1/2 + sqrt(1/4 + t^2))) / ((1+t) sqrt t) dt
double gamma_half_via_Cc();

} // namespace commlip
