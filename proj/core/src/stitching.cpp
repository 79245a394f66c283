#include "commlip/stitching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "commlip/closed_forms.hpp"
#include "commlip/errors.hpp"
#include "commlip/quadrature.hpp"

namespace commlip {

double continuity_lift(double C, double c, double d)
{
    if (!(c > 0.0)) throw DomainViolation("continuity_lift: c must be positive");
    if (d < c) throw ArgumentOrder("continuity_lift: need d >= c");
    return C * (d + 1.0) / (c + 1.0);
}

namespace {

void check_points(const std::vector<BoundPoint>& points)
{
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].degenerate || points[k].C_k == kDegenerateValue) {
            std::ostringstream msg;
            msg << "degenerate node at c = " << points[k].c;
            throw DegenerateNode(msg.str());
        }
        if (!(points[k].c > 0.0)) throw DomainViolation("node positions must be positive");
        if (k > 0 && !(points[k].c > points[k - 1].c)) {
            throw ArgumentOrder("nodes must be strictly increasing in c");
        }
    }
}

// Nodes are compared against the requested span with a tolerance that absorbs
// decimal round-off in files.
constexpr double kSpanTol = 5e-5;

void check_span(const std::vector<BoundPoint>& points, double c1, double cn)
{
    if (points.empty()) throw CoverageGap("no nodes");
    if (std::abs(points.front().c - c1) > kSpanTol || std::abs(points.back().c - cn) > kSpanTol) {
        std::ostringstream msg;
        msg << "nodes cover [" << points.front().c << ", " << points.back().c
            << "] but [" << c1 << ", " << cn << "] was requested";
        throw CoverageGap(msg.str());
    }
}

} // namespace

StitchedCertificate stitch(const std::vector<BoundPoint>& points)
{
    check_points(points);
    StitchedCertificate cert;
    cert.points = points;
    if (points.empty()) return cert;

    for (std::size_t k = 1; k < points.size(); ++k) {
        cert.delta_c = std::max(cert.delta_c, points[k].c - points[k - 1].c);
    }
    cert.lifted.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double next = k + 1 < points.size() ? points[k + 1].c : points[k].c + cert.delta_c;
        cert.lifted.push_back(continuity_lift(points[k].C_k, points[k].c, next));
    }
    cert.global_C = *std::max_element(cert.lifted.begin(), cert.lifted.end());
    return cert;
}

double corner_small(double c1)
{
    if (!(c1 > 0.0)) throw DomainViolation("corner_small: c1 must be positive");
    return c1 + 1.0;
}

double corner_large(double cn)
{
    if (!(cn >= 0.5)) throw DomainViolation("corner_large: needs cn >= 1/2");
    return shift_bound_e(cn) * (cn + 1.0) / cn;
}

StitchedCertificate global_constant(const std::vector<BoundPoint>& points, double c1, double cn)
{
    check_span(points, c1, cn);
    auto cert = stitch(points);
    cert.corner_small = corner_small(c1);
    cert.corner_large = corner_large(cn);
    cert.global_C = std::max({cert.corner_small, cert.corner_large, cert.global_C});
    return cert;
}

double sqrt_constant(const std::vector<BoundPoint>& points, double c1, double cn)
{
    check_span(points, c1, cn);
    check_points(points);
    double sum = 2.0 * std::sqrt(points.front().c);
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const double ck = points[k].c;
        sum += 2.0 * points[k].C_k / (ck + 1.0) * (std::sqrt(points[k + 1].c) - std::sqrt(ck));
    }
    sum += 2.0 / std::sqrt(points.back().c);
    return sum / std::numbers::pi;
}

double gamma_half_via_Cc()
{
    const double cap = csc1();
    const auto f = [cap](double t) {
        const double cayley = (t + 1.0) / (0.5 + std::sqrt(0.25 + t * t));
        return std::min(cap, cayley) / (1.0 + t);
    };
    return integrate_inv_sqrt_half_line(f, 1e-12).value / std::numbers::pi;
}

} // namespace commlip
