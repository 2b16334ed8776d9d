/***************************************************************
 *  geometry.hpp
 *
 *  Rate-region geometry over pentagon constraint sets:
 *  membership tests, union boundaries on an R1 grid, Pareto
 *  filtering, upper-right convex hulls (time sharing), and
 *  boundary dominance between regions.
 ***************************************************************/

#ifndef TWRC_GEOMETRY_HPP
#define TWRC_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twrc/schemes.hpp"

namespace twrc {

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;
};

/// A union of pentagons, optionally with the split parameters that produced
/// each one (aligned with `pentagons` when the scheme has free parameters)
/// and a cached Pareto boundary sorted by strictly increasing r1.
struct RateRegion {
    std::vector<RateConstraintSet> pentagons;
    std::vector<SplitParams> params;
    std::optional<std::vector<RatePoint>> boundary;
};

constexpr double kMembershipTol = 1e-12;

/// Closed membership with absolute tolerance; the sum constraint is skipped
/// when unbounded.
inline bool contains(const RateConstraintSet& set, const RatePoint& p,
                     double tol = kMembershipTol) {
    if (p.r1 < -tol || p.r2 < -tol) return false;
    if (p.r1 > set.r1_max + tol) return false;
    if (p.r2 > set.r2_max + tol) return false;
    if (set.sum_max && p.r1 + p.r2 > *set.sum_max + tol) return false;
    return true;
}

namespace detail {

// Largest r1 at which the pentagon still admits a feasible point.
inline double r1_extent(const RateConstraintSet& s) {
    return s.sum_max ? std::min(s.r1_max, *s.sum_max) : s.r1_max;
}

// Largest feasible r2 at the given r1, or nullopt when r1 is out of range.
inline std::optional<double> best_r2_at(const RateConstraintSet& s, double r1) {
    if (r1 > r1_extent(s)) return std::nullopt;
    return s.sum_max ? std::min(s.r2_max, *s.sum_max - r1) : s.r2_max;
}

}  // namespace detail

/// One boundary column: the point and the index of the pentagon attaining it.
struct BoundaryColumn {
    RatePoint point;
    std::size_t pentagon = 0;
};

/// Upper envelope of a pentagon union sampled on `resolution` r1 columns
/// from 0 to the largest feasible r1, plus a closing drop to the r1 axis.
/// Column values are maxima, so the output is independent of list order.
inline std::vector<BoundaryColumn> union_boundary_indexed(
    const std::vector<RateConstraintSet>& pentagons, std::size_t resolution) {
    if (pentagons.empty())
        throw std::invalid_argument("union_boundary: pentagon list is empty");
    if (resolution < 2)
        throw std::invalid_argument("union_boundary: resolution must be at least 2");

    double max_r1 = 0.0;
    for (const auto& s : pentagons) max_r1 = std::max(max_r1, detail::r1_extent(s));

    std::vector<BoundaryColumn> out;
    out.reserve(resolution + 1);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
        const double r1 = t * max_r1;
        double best = -1.0;
        std::size_t arg = 0;
        for (std::size_t k = 0; k < pentagons.size(); ++k) {
            const auto r2 = detail::best_r2_at(pentagons[k], r1);
            if (r2 && *r2 > best) {
                best = *r2;
                arg = k;
            }
        }
        if (best < 0.0) continue;  // column beyond every pentagon (rounding only)
        out.push_back({{r1, best}, arg});
    }
    if (!out.empty() && out.back().point.r2 > 0.0)
        out.push_back({{out.back().point.r1, 0.0}, out.back().pentagon});
    return out;
}

inline std::vector<RatePoint> union_boundary(const std::vector<RateConstraintSet>& pentagons,
                                             std::size_t resolution) {
    std::vector<RatePoint> pts;
    for (const auto& c : union_boundary_indexed(pentagons, resolution)) pts.push_back(c.point);
    return pts;
}

/// Keeps the max r2 per r1 and enforces strictly increasing r1 with
/// nonincreasing r2 (drops dominated points).
inline std::vector<RatePoint> pareto_filter(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
        if (a.r1 != b.r1) return a.r1 < b.r1;
        return a.r2 > b.r2;
    });
    std::vector<RatePoint> out;
    for (const auto& p : pts) {
        if (!out.empty() && p.r1 == out.back().r1) continue;  // keep max r2 only
        while (!out.empty() && out.back().r2 < p.r2) out.pop_back();
        out.push_back(p);
    }
    return out;
}

/// Computes and caches the Pareto boundary of a region.
inline void compute_boundary(RateRegion& region, std::size_t resolution) {
    region.boundary = pareto_filter(union_boundary(region.pentagons, resolution));
}

/// Upper-right convex hull of a point cloud, augmented with its axis
/// projections (0, max r2) and (max r1, 0). Monotone chain; collinear
/// interior points are dropped. The result is an outline from the r2 axis
/// to the r1 axis that dominates every input point.
inline std::vector<RatePoint> convex_hull(std::vector<RatePoint> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");

    double max_r1 = 0.0, max_r2 = 0.0;
    for (const auto& p : pts) {
        max_r1 = std::max(max_r1, p.r1);
        max_r2 = std::max(max_r2, p.r2);
    }
    pts.push_back({0.0, max_r2});
    pts.push_back({max_r1, 0.0});

    std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
        if (a.r1 != b.r1) return a.r1 < b.r1;
        return a.r2 > b.r2;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RatePoint& a, const RatePoint& b) {
                              return a.r1 == b.r1 && a.r2 == b.r2;
                          }),
              pts.end());

    auto cross = [](const RatePoint& o, const RatePoint& a, const RatePoint& b) {
        return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
    };

    std::vector<RatePoint> hull;
    for (const auto& p : pts) {
        // points with equal r1: only the top one can start a hull edge,
        // except the terminal drop to the axis
        if (!hull.empty() && p.r1 == hull.back().r1 && p.r1 < max_r1) continue;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

/// Piecewise-linear value of an outline polyline at the given r1 (vertical
/// segments contribute their upper value). r1 beyond the outline returns 0.
inline double polyline_value_at(const std::vector<RatePoint>& poly, double r1) {
    if (poly.empty()) throw std::invalid_argument("polyline_value_at: empty polyline");
    if (r1 <= poly.front().r1) return poly.front().r2;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        const auto& a = poly[i - 1];
        const auto& b = poly[i];
        if (r1 <= b.r1) {
            if (b.r1 == a.r1) return std::max(a.r2, b.r2);
            const double t = (r1 - a.r1) / (b.r1 - a.r1);
            return a.r2 + t * (b.r2 - a.r2);
        }
    }
    return 0.0;
}

/// True iff region A's cached boundary is at least region B's minus tol at
/// every grid column. Both boundaries must exist on a common r1 grid.
inline bool dominates(const RateRegion& a, const RateRegion& b, double tol = 1e-6) {
    if (!a.boundary || !b.boundary)
        throw std::invalid_argument("dominates: boundaries not computed");
    const auto& ba = *a.boundary;
    const auto& bb = *b.boundary;
    if (ba.size() != bb.size())
        throw std::invalid_argument("dominates: boundary grids differ in size");
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (std::abs(ba[i].r1 - bb[i].r1) > kMembershipTol)
            throw std::invalid_argument("dominates: boundary grids differ in r1 values");
        if (ba[i].r2 < bb[i].r2 - tol) return false;
    }
    return true;
}

/// Largest columnwise boundary excess of A over B on their common grid.
inline double max_boundary_gain(const RateRegion& a, const RateRegion& b) {
    if (!a.boundary || !b.boundary)
        throw std::invalid_argument("max_boundary_gain: boundaries not computed");
    const auto& ba = *a.boundary;
    const auto& bb = *b.boundary;
    if (ba.size() != bb.size())
        throw std::invalid_argument("max_boundary_gain: boundary grids differ in size");
    double gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ba.size(); ++i)
        gain = std::max(gain, ba[i].r2 - bb[i].r2);
    return gain;
}

}  // namespace twrc

#endif  // TWRC_GEOMETRY_HPP
