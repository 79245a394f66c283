#pragma once

#include <functional>

namespace commlip {

struct ToleranceConfig {
    double root_tol = 1e-5;  // T: distance between an approximate and a true root
    double comp_tol = 1e-10; // T_f: sign-check margin

    void validate() const;
};

struct RootResult {
    double x = 0.0;
    int iterations = 0;
    double bracket_width = 0.0;
};

inline constexpr int kBrentMaxIterations = 200;

/// Deterministic Brent (zeroin) on [lo, hi]. Stops once the enclosing bracket
/// is narrower than T/10, so a sign change of `fun` lies in [x - T, x + T].
/// Throws NoSignChange unless fun(lo) * fun(hi) < 0.
RootResult brent_root(const std::function<double(double)>& fun, double lo, double hi,
                      const ToleranceConfig& tol = {});

double bracketed_root(const std::function<double(double)>& fun, double lo, double hi,
                      const ToleranceConfig& tol = {});

} // namespace commlip
