#pragma once

// Brute-force reference implementations used as test oracles. Deliberately
// independent of the library's algorithms: quadratic pair scans and cubic
// hull-edge tests instead of calipers and monotone chains.

#include <algorithm>
#include <cmath>
#include <vector>

#include "hullcover/geom.hpp"
#include "hullcover/rng.hpp"

namespace oracle {

using hullcover::ConvexFigure;
using hullcover::Point;

inline double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double cross3(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// max pairwise vertex distance, O(n^2)
inline double diameter(const ConvexFigure& K) {
    const auto& v = K.vertices();
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::max(best, dist(v[i], v[j]));
    return best;
}

// point-in-convex-hull by scanning all directed candidate hull edges, O(n^3)
inline bool point_in_hull(const Point& p, const std::vector<Point>& pts,
                          double eps = 1e-12) {
    if (pts.empty()) return false;
    bool found_edge = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            bool all_left = true;
            for (std::size_t k = 0; k < pts.size() && all_left; ++k)
                if (cross3(pts[i], pts[j], pts[k]) < -eps) all_left = false;
            if (!all_left) continue;
            found_edge = true;
            if (cross3(pts[i], pts[j], p) < -eps) return false;
        }
    }
    if (!found_edge) {
        // all points collinear (or a single point): check the segment between
        // the lexicographic extremes
        auto lex = [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        };
        const Point lo = *std::min_element(pts.begin(), pts.end(), lex);
        const Point hi = *std::max_element(pts.begin(), pts.end(), lex);
        return hullcover::point_segment_distance(p, lo, hi) <= eps;
    }
    return true;
}

// extreme points of a set: p is extreme iff it is outside the hull of the rest
inline std::vector<Point> extreme_points(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> rest;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        if (rest.empty() || !point_in_hull(pts[i], rest)) out.push_back(pts[i]);
    }
    return out;
}

// does the line through A and w support K (all vertices on one closed side)?
inline bool is_support_line(const ConvexFigure& K, const Point& A, const Point& w,
                            double eps = 1e-9) {
    bool any_pos = false, any_neg = false;
    for (const Point& v : K.vertices()) {
        const double c = cross3(A, w, v);
        if (c > eps) any_pos = true;
        if (c < -eps) any_neg = true;
    }
    return !(any_pos && any_neg);
}

// strictly convex polygon with ~n vertices in convex position on a circle
inline ConvexFigure circle_polygon(std::size_t n, std::uint64_t seed) {
    hullcover::Rng rng(seed);
    std::vector<double> angles(n);
    for (double& a : angles) a = rng.uniform(0.0, 6.283185307179586);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    pts.reserve(n);
    const double r = 0.5 + rng.uniform();
    for (double a : angles) pts.emplace_back(r * std::cos(a), r * std::sin(a));
    return hullcover::convex_hull(pts);
}

// polygon whose diameter is realized by a boundary edge: circle arc points
// over a base chord of length 2r
inline ConvexFigure diameter_edge_polygon(std::size_t arc_points, std::uint64_t seed) {
    hullcover::Rng rng(seed);
    const double r = 0.5 + rng.uniform();
    std::vector<Point> pts{{-r, 0.0}, {r, 0.0}};
    for (std::size_t i = 0; i < arc_points; ++i) {
        const double a = rng.uniform(0.05, 3.0915926535897932);
        pts.emplace_back(r * std::cos(a), r * std::sin(a));
    }
    return hullcover::convex_hull(pts);
}

}  // namespace oracle
