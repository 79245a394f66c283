#pragma once

#include <vector>

#include "commlip/optimizer.hpp"

namespace commlip {

/// min(c, 1) / f1(c); the bound ||[h(A), X]|| <= min(||[A,X]||, 1) relative to f1.
double trivial_ratio(double c);
/// sup_c trivial_ratio(c) = 2, attained at c = 1.
double trivial_constant();

/// e(c) = c for c < 1/2 and 1 - 1/(4c) otherwise.
double shift_bound_e(double c);
/// sup_c e(c) / f1(c) = 25/16, attained at c = 2/3.
double shift_constant();

// Bounds on gamma_0(r), the constant in ||[A^r, X]|| <= gamma ||X||^{1-r} ||[A,X]||^r.
double gamma_boyadzhiev(double r);     // sin(pi r) / (pi r (1 - r))
double gamma_olsen_pedersen(double r); // (1 - r)^{r - 1}
double gamma_pedersen(double r);       // 2^r (1-r)^{-(1-r)/2} (1+r)^{-(1+r)/2}
double gamma_tangent(double r);        // (2 - r) 2^{r - 1}
/// (2 - r) [ ((1 - r)/2) a^r + r a^{r-1} ], minimised at a = 2.
double tangent_objective(double r, double a);

struct SinMinimum {
    double value = 0.0;
    double argmin = 0.0;
};
/// min over t in (0, pi) of t^r / sin t, by golden-section search.
SinMinimum gamma_sin(double r);

/// 1 / sin(1)
double csc1();

/// Piecewise quadratic approximant: g = f on [a, inf) and a quadratic with
/// slope F'(a) + m below a, matched to f and f' at a.
struct PiecewiseQuadParams {
    double a = 1.0;
    double m = 0.0;

    void validate() const; // a > 0, m <= 0
};

// f(x) = sqrt(x), c = 1
double pq_sqrt_g(double x, const PiecewiseQuadParams& p);
double pq_sqrt_t_star(const PiecewiseQuadParams& p);
double pq_sqrt_bound(const PiecewiseQuadParams& p);

// f = f1, evaluated as a ratio against f1(c)
double pq_f1_g(double x, const PiecewiseQuadParams& p);
double pq_f1_t_star(const PiecewiseQuadParams& p);
double pq_f1_bound(double c, const PiecewiseQuadParams& p);

struct PqNode {
    double c = 0.0;
    double value = 0.0;
    PiecewiseQuadParams params;
};

/// Minimises pq_f1_bound over (a, m) at each node, chaining starts along the grid.
std::vector<PqNode> pq_f1_optimize_grid(const std::vector<double>& grid,
                                        PatternSearchConfig cfg = {1.0, 0.5, 2.0, 1e-10});

/// max_k C_k (c_{k+1} + 1) / (c_k + 1) with c_{n+1} = c_n + max spacing.
double pq_f1_lifted_constant(const std::vector<PqNode>& nodes);

/// min(t + 1, (t + 1)/t)
double simple_Ct(double t);
/// (c + 1) / (1/2 + sqrt(1/4 + c^2)); maximum 5/4 at c = 2/3.
double scaled_cayley_Cc(double c);
/// Scale at which the Cayley-transform bound is attained: (-1 + sqrt(1 + 4c^2)) / (2c).
double scaled_cayley_t(double c);

enum class LvFamily {
    shifted_sqrt, // f_t(x) = sqrt(x + t) - sqrt(t), parameter t > 0
    power,        // x^r, parameter r in (0, 1)
};
/// Commutator size below which the extended Loring-Vides inequality is not
/// asserted: sqrt(t) sqrt(x + t) - t, or r^{1/(1-r)} x.
double lv_threshold(LvFamily family, double param, double x);

} // namespace commlip
