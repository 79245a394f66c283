#pragma once

#include <optional>

#include "commlip/roots.hpp"

// Scalar machinery for bounding E_{f1}(c) / f1(c) with the Gaussian
// approximant family g'(x) = a * exp(-b x^2), f1(x) = x / (x + 1).

namespace commlip {

/// (a, b) of G(x) = a exp(-b x^2). `a` is g'(0), the commutator-Lipschitz
/// budget of the approximant; `b` is the decay rate.
struct GaussianParams {
    double a = 1.0;
    double b = 1.0;

    [[nodiscard]] bool valid() const noexcept;
    void validate() const;

    friend bool operator==(const GaussianParams&, const GaussianParams&) = default;
};

inline constexpr double kDegenerateValue = 10.0;

struct ErfMinOutcome {
    double value = kDegenerateValue;
    std::optional<double> root_left;  // x1, present only when a < 1
    std::optional<double> root_right; // x2
    double error_budget = 0.0;        // 2 (1 + a) T
    bool degenerate = false;          // Phi(x_*) >= 0
    bool x_end_adjusted = false;
    double oscillation = 0.0;         // max j - min j estimate, without the cushion
};

double f1(double x);

/// std::erf; kept as a named entry point so every caller shares one choice.
double erf(double x);

/// g(x) = (a/2) sqrt(pi/b) erf(sqrt(b) x), the antiderivative of G with g(0)=0.
double g_erf(double x, const GaussianParams& p);
/// lim_{x->inf} g(x) = (a/2) sqrt(pi/b).
double g_erf_limit(const GaussianParams& p);

double j_func(double x, const GaussianParams& p);
double j_prime(double x, const GaussianParams& p);
/// 1 - (a/2) sqrt(pi/b)
double j_infinity(const GaussianParams& p);

/// Phi(x) = b x^2 - 2 log(x+1) - log(a); same sign as j'(x) on x >= 0.
double phi(double x, const GaussianParams& p);

/// Unique minimiser of Phi on (-1, inf): the positive root of x^2 + x - 1/b.
double x_star(double b);

struct XEnd {
    double x = 0.0;
    bool radicand_clamped = false;
    int doublings = 0;
};

/// Right end of the bracket holding every non-negative root of Phi:
/// (1 + sqrt(1 + b log a)) / b, with the radicand clamped at zero and the
/// result doubled (at most 60 times) until Phi(x_e) > 0.
XEnd x_end(const GaussianParams& p);

/// Certified upper bound for (sup j - inf j + c a) / f1(c) at the given
/// Gaussian parameters, or the sentinel 10 when Phi(x_*) >= 0.
///
/// Throws RootValidationFailed when the approximate roots fail their +-T sign
/// checks and DomainViolation when x~_i - T < T_f. Both mean the triple
/// (c, a, b) must be rejected.
ErfMinOutcome erf_min_bound(double c, const GaussianParams& p, const ToleranceConfig& tol = {});

} // namespace commlip
