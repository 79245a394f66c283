#include "commlip/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "commlip/errors.hpp"

namespace commlip {

void PatternSearchConfig::validate() const
{
    if (!(initial_step > 0.0) || !(min_step > 0.0) || !(min_step < initial_step)) {
        throw BadParameter("pattern search: need 0 < min_step < initial_step");
    }
    if (!(shrink > 0.0 && shrink < 1.0) || !(expand >= 1.0)) {
        throw BadParameter("pattern search: need 0 < shrink < 1 <= expand");
    }
    if (max_evals == 0) {
        throw BadParameter("pattern search: max_evals must be positive");
    }
}

PatternSearchResult pattern_search(const std::function<double(const Point2&)>& objective,
                                   const Point2& start, const PatternSearchConfig& cfg)
{
    cfg.validate();

    PatternSearchResult res;
    res.x = {std::max(start[0], cfg.lower_bounds[0]), std::max(start[1], cfg.lower_bounds[1])};
    res.value = objective(res.x);
    res.evaluations = 1;

    double step = cfg.initial_step;
    // Poll order: +x0, -x0, +x1, -x1.
    constexpr std::array<std::pair<int, double>, 4> directions{
        {{0, 1.0}, {0, -1.0}, {1, 1.0}, {1, -1.0}}};

    while (step >= cfg.min_step && res.evaluations < cfg.max_evals) {
        bool improved = false;
        for (const auto& [axis, sign] : directions) {
            Point2 trial = res.x;
            trial[axis] = std::max(trial[axis] + sign * step, cfg.lower_bounds[axis]);
            if (trial[axis] == res.x[axis]) {
                continue;
            }
            const double v = objective(trial);
            ++res.evaluations;
            if (v < res.value) {
                res.x = trial;
                res.value = v;
                improved = true;
                break;
            }
            if (res.evaluations >= cfg.max_evals) {
                break;
            }
        }
        step *= improved ? cfg.expand : cfg.shrink;
    }
    res.final_step = step;
    return res;
}

GaussianParams pattern_search(const std::function<double(const GaussianParams&)>& objective,
                              const GaussianParams& start, const PatternSearchConfig& cfg)
{
    const auto wrapped = [&objective](const Point2& x) { return objective({x[0], x[1]}); };
    const auto res = pattern_search(wrapped, Point2{start.a, start.b}, cfg);
    return {res.x[0], res.x[1]};
}

std::vector<double> build_paper_grid()
{
    // Units of 1/20000: 0.0195 = 390, 0.0005 = 10, 1.5 = 30000, 0.005 = 100,
    // 10 = 200000, 0.05 = 1000, 40 = 800000.
    constexpr double unit = 20000.0;
    std::vector<double> grid;
    grid.reserve(5262);
    for (long n = 390; n <= 30000; n += 10) grid.push_back(static_cast<double>(n) / unit);
    for (long n = 30100; n <= 200000; n += 100) grid.push_back(static_cast<double>(n) / unit);
    for (long n = 201000; n <= 800000; n += 1000) grid.push_back(static_cast<double>(n) / unit);
    return grid;
}

std::vector<double> build_uniform_grid(double start, double step, double stop)
{
    if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw BadParameter("uniform grid: need step > 0 and stop >= start");
    }
    const auto count = static_cast<long>(std::llround((stop - start) / step));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count) + 1);
    for (long k = 0; k < count; ++k) grid.push_back(start + static_cast<double>(k) * step);
    grid.push_back(stop);
    return grid;
}

double erf_min_objective(double c, const GaussianParams& p, const ToleranceConfig& tol)
{
    if (!p.valid()) return std::numeric_limits<double>::infinity();
    try {
        const auto out = erf_min_bound(c, p, tol);
        return out.degenerate ? std::numeric_limits<double>::infinity() : out.value;
    } catch (const RootValidationFailed&) {
        return std::numeric_limits<double>::infinity();
    } catch (const DomainViolation&) {
        return std::numeric_limits<double>::infinity();
    } catch (const NoSignChange&) {
        return std::numeric_limits<double>::infinity();
    }
}

BoundPoint certify_node(double c, const GaussianParams& p, const ToleranceConfig& tol)
{
    BoundPoint bp;
    bp.c = c;
    bp.params = p;
    try {
        const auto out = erf_min_bound(c, p, tol);
        bp.C_k = out.value;
        bp.degenerate = out.degenerate;
    } catch (const Error&) {
        bp.C_k = kDegenerateValue;
        bp.degenerate = true;
    }
    return bp;
}

namespace {

struct NodeResult {
    Point2 x;
    double value;
};

// The objective has ridges where the two oscillation terms trade places; an
// axis-only poll stalls on them. Polishing alternates between log coordinates
// and the same coordinates rotated by 45 degrees.
NodeResult polish(const std::function<double(const Point2&)>& objective, NodeResult best,
                  const GridOptions& opts)
{
    constexpr double s = std::numbers::sqrt2 / 2.0;
    const auto from_log = [](const Point2& u) { return Point2{std::exp(u[0]), std::exp(u[1])}; };
    const auto in_log = [&](const Point2& u) { return objective(from_log(u)); };
    const auto in_rot = [&](const Point2& w) {
        return objective(from_log({s * (w[0] + w[1]), s * (w[0] - w[1])}));
    };

    PatternSearchConfig cfg = opts.search;
    const double lo = -std::numeric_limits<double>::max();
    cfg.lower_bounds = {lo, lo};
    cfg.min_step = std::min(cfg.min_step, 1e-10);

    for (int round = 0; round < opts.restarts; ++round) {
        const double before = best.value;
        Point2 u{std::log(best.x[0]), std::log(best.x[1])};
        const auto r1 = pattern_search(in_log, u, cfg);
        if (r1.value < best.value) {
            best = {from_log(r1.x), r1.value};
            u = r1.x;
        }
        const auto r2 = pattern_search(in_rot, Point2{s * (u[0] + u[1]), s * (u[0] - u[1])}, cfg);
        if (r2.value < best.value) {
            best = {from_log({s * (r2.x[0] + r2.x[1]), s * (r2.x[0] - r2.x[1])}), r2.value};
        }
        if (!(best.value < before)) break;
    }
    // Stay inside the admissible quadrant used by the axis search.
    best.x = {std::max(best.x[0], opts.search.lower_bounds[0]),
              std::max(best.x[1], opts.search.lower_bounds[1])};
    best.value = objective(best.x);
    return best;
}

NodeResult search_from(const std::function<double(const Point2&)>& objective, const Point2& start,
                       const GridOptions& opts)
{
    const auto r = pattern_search(objective, start, opts.search);
    return polish(objective, {r.x, r.value}, opts);
}

GaussianParams optimize_node(double c, const GaussianParams& start, const GridOptions& opts)
{
    const auto objective = [&](const Point2& x) {
        return erf_min_objective(c, GaussianParams{x[0], x[1]}, opts.tol);
    };
    auto best = search_from(objective, {start.a, start.b}, opts);
    if (!(start == opts.first_start)) {
        const auto cold = search_from(objective, {opts.first_start.a, opts.first_start.b}, opts);
        if (cold.value < best.value) best = cold;
    }
    return {best.x[0], best.x[1]};
}

void check_grid(const std::vector<double>& grid)
{
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] > 0.0) || !std::isfinite(grid[k])) {
            throw BadParameter("grid values must be positive");
        }
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            throw BadParameter("grid must be strictly increasing");
        }
    }
}

} // namespace

std::vector<BoundPoint> optimize_grid(const std::vector<double>& grid, const GridOptions& opts,
                                      const std::vector<std::optional<GaussianParams>>& warm_start)
{
    check_grid(grid);
    opts.search.validate();
    opts.tol.validate();
    if (!warm_start.empty() && warm_start.size() != grid.size()) {
        throw BadParameter("warm start table length does not match the grid");
    }

    std::vector<BoundPoint> points(grid.size());
    const bool fully_warm =
        !warm_start.empty() && std::all_of(warm_start.begin(), warm_start.end(),
                                           [](const auto& w) { return w.has_value(); });

    if (fully_warm && opts.threads > 1 && grid.size() > 1) {
        std::atomic<std::size_t> next{0};
        const auto worker = [&]() {
            for (std::size_t k = next++; k < grid.size(); k = next++) {
                const auto best = optimize_node(grid[k], *warm_start[k], opts);
                points[k] = certify_node(grid[k], best, opts.tol);
            }
        };
        const unsigned n = std::min<unsigned>(opts.threads, static_cast<unsigned>(grid.size()));
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        return points; // jthreads join on destruction
    }

    GaussianParams previous = opts.first_start;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const GaussianParams start =
            (!warm_start.empty() && warm_start[k]) ? *warm_start[k] : previous;
        const auto best = optimize_node(grid[k], start, opts);
        points[k] = certify_node(grid[k], best, opts.tol);
        previous = best;
    }
    return points;
}

} // namespace commlip
