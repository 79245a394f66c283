#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "commlip/core_approx.hpp"

namespace commlip {

struct PatternSearchConfig {
    double initial_step = 0.5;
    double shrink = 0.5;
    double expand = 2.0;
    double min_step = 1e-9;
    std::size_t max_evals = 20000;
    std::array<double, 2> lower_bounds{1e-8, 1e-8};

    void validate() const;
};

using Point2 = std::array<double, 2>;

struct PatternSearchResult {
    Point2 x{};
    double value = 0.0;
    std::size_t evaluations = 0;
    double final_step = 0.0;
};

/// Compass search on two coordinates. Polls (+x0, -x0, +x1, -x1) at the
/// current step, moves to the first strict improvement and multiplies the
/// step by `expand`; a full failed poll multiplies it by `shrink`. Stops when
/// the step drops below `min_step` or `max_evals` objective calls are spent.
/// Polled points are clamped to `lower_bounds`.
PatternSearchResult pattern_search(const std::function<double(const Point2&)>& objective,
                                   const Point2& start, const PatternSearchConfig& cfg = {});

GaussianParams pattern_search(const std::function<double(const GaussianParams&)>& objective,
                              const GaussianParams& start, const PatternSearchConfig& cfg = {});

struct BoundPoint {
    double c = 0.0;
    double C_k = kDegenerateValue;
    GaussianParams params;
    bool degenerate = true;
};

/// 0.0195 (+0.0005) 1.5 (+0.005) 10 (+0.05) 40, built from integer multiples
/// of 1/20000 so segment ends are exact.
std::vector<double> build_paper_grid();

/// Uniform grid from `start` to `stop` inclusive with `step`; the node count is
/// rounded from (stop - start) / step and nodes are start + k * step.
std::vector<double> build_uniform_grid(double start, double step, double stop);

/// Objective used by optimize_grid: erf_min_bound(c, p).value for
/// non-degenerate, validated triples and +inf otherwise.
double erf_min_objective(double c, const GaussianParams& p, const ToleranceConfig& tol = {});

/// Re-evaluates the certificate at fixed parameters. Degenerate or rejected
/// triples produce a degenerate BoundPoint with C_k = 10.
BoundPoint certify_node(double c, const GaussianParams& p, const ToleranceConfig& tol = {});

struct GridOptions {
    PatternSearchConfig search;
    ToleranceConfig tol;
    GaussianParams first_start{0.9, 0.5};
    /// Upper limit on polishing rounds after the axis search. Each round runs
    /// the same pattern search in log(a), log(b) and then in that frame
    /// rotated by 45 degrees; rounds stop once neither improves.
    int restarts = 8;
    /// Worker count; only used when every node has a warm start.
    unsigned threads = 1;
};

/// Optimises (a, b) for every grid node. A node starts from warm_start[k] when
/// given, otherwise from the previous node's optimum (the first node from
/// `first_start`), and is also searched from `first_start` with the better
/// result kept, so a poor basin does not propagate along the chain. Nodes are
/// processed in grid order; when every node carries
/// a warm start the work is spread across `threads` workers with identical
/// results.
std::vector<BoundPoint> optimize_grid(
    const std::vector<double>& grid, const GridOptions& opts = {},
    const std::vector<std::optional<GaussianParams>>& warm_start = {});

} // namespace commlip
