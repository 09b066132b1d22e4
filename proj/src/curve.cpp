#include "hullcover/curve.hpp"

#include <algorithm>
#include <cmath>

namespace hullcover {

Curve::Curve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2)
        throw InvalidInput("curve needs at least two vertices");
    cumulative_.reserve(vertices_.size());
    cumulative_.push_back(0.0);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        cumulative_.push_back(cumulative_.back() +
                              distance(vertices_[i - 1], vertices_[i]));
}

double curve_length(const Curve& c) { return c.length(); }

Point point_at(const Curve& c, double s) {
    const auto& cum = c.cumulative_lengths();
    const auto& v = c.vertices();
    if (s < 0.0 || s > cum.back())
        throw InvalidParameter("point_at: arc length out of range");
    auto it = std::lower_bound(cum.begin(), cum.end(), s);
    std::size_t i = static_cast<std::size_t>(it - cum.begin());
    if (i == 0) return v[0];
    const double seg = cum[i] - cum[i - 1];
    if (seg == 0.0) return v[i];
    const double t = (s - cum[i - 1]) / seg;
    return {v[i - 1].x + t * (v[i].x - v[i - 1].x),
            v[i - 1].y + t * (v[i].y - v[i - 1].y)};
}

ConvexFigure hull_of_curve(const Curve& c, const Tolerances& tol) {
    return convex_hull(c.vertices(), tol.eps_geom);
}

Curve subdivide(const Curve& c, int k) {
    const auto& v = c.vertices();
    std::vector<Point> out;
    out.reserve(v.size() + (v.size() - 1) * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        out.push_back(v[i]);
        for (int m = 1; m <= k; ++m) {
            const double t = static_cast<double>(m) / (k + 1);
            out.push_back({v[i].x + t * (v[i + 1].x - v[i].x),
                           v[i].y + t * (v[i + 1].y - v[i].y)});
        }
    }
    out.push_back(v.back());
    return Curve(std::move(out));
}

Curve resample_by_arclength(const Curve& c, std::size_t n) {
    if (n < 2) throw InvalidInput("resample_by_arclength: need n >= 2");
    std::vector<Point> out;
    out.reserve(n);
    const double L = c.length();
    for (std::size_t i = 0; i < n; ++i) {
        const double s =
            L * static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back(point_at(c, std::min(s, L)));
    }
    return Curve(std::move(out));
}

Curve lift_to(const Curve& c, std::size_t n) {
    if (c.vertex_count() > n) return resample_by_arclength(c, n);
    std::vector<Point> v = c.vertices();
    while (v.size() < n) {
        std::size_t longest = 0;
        double best = -1.0;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            const double d = distance(v[i], v[i + 1]);
            if (d > best) {
                best = d;
                longest = i;
            }
        }
        const Point mid{0.5 * (v[longest].x + v[longest + 1].x),
                        0.5 * (v[longest].y + v[longest + 1].y)};
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(longest) + 1, mid);
    }
    return Curve(std::move(v));
}

CoverageReport covers(const Curve& c, const ConvexFigure& K, const Tolerances& tol) {
    const ConvexFigure hull = hull_of_curve(c, tol);
    double worst = 0.0;
    for (const Point& v : K.vertices())
        worst = std::max(worst, signed_distance(hull, v));

    CoverageReport r;
    r.covered = worst <= tol.eps_geom;
    r.max_violation = r.covered ? 0.0 : worst;
    r.curve_length = c.length();
    r.figure_perimeter = perimeter(K);
    r.figure_diameter = diameter(K).value;
    r.slack = r.curve_length - (r.figure_perimeter - r.figure_diameter);
    return r;
}

Curve boundary_arc(const ConvexFigure& K, std::size_t i, std::size_t j, ArcSide side) {
    if (K.kind() != FigureKind::polygon)
        throw InvalidInput("boundary_arc: figure must be a polygon");
    const auto& v = K.vertices();
    const std::size_t n = v.size();
    if (i >= n || j >= n) throw InvalidInput("boundary_arc: vertex index out of range");
    if (i == j) throw InvalidInput("boundary_arc: arc endpoints coincide");

    std::vector<Point> out;
    if (side == ArcSide::left) {
        for (std::size_t k = i;; k = (k + 1) % n) {
            out.push_back(v[k]);
            if (k == j) break;
        }
    } else {
        for (std::size_t k = i;; k = (k + n - 1) % n) {
            out.push_back(v[k]);
            if (k == j) break;
        }
    }
    return Curve(std::move(out));
}

}  // namespace hullcover
