#include "hullcover/geom.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace hullcover {

double distance(const Point& p, const Point& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

double cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Point(a.x + t * ab.x, a.y + t * ab.y));
}

namespace {

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    const double v = cross(a, b, c);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int d1 = orientation_sign(c, d, a);
    const int d2 = orientation_sign(c, d, b);
    const int d3 = orientation_sign(a, b, c);
    const int d4 = orientation_sign(a, b, d);
    if (d1 != d2 && d3 != d4) return true;
    if (d1 == 0 && on_segment_collinear(c, d, a)) return true;
    if (d2 == 0 && on_segment_collinear(c, d, b)) return true;
    if (d3 == 0 && on_segment_collinear(a, b, c)) return true;
    if (d4 == 0 && on_segment_collinear(a, b, d)) return true;
    return false;
}

Point vertex_centroid(const std::vector<Point>& v) {
    double sx = 0.0, sy = 0.0;
    for (const Point& p : v) {
        sx += p.x;
        sy += p.y;
    }
    return {sx / static_cast<double>(v.size()), sy / static_cast<double>(v.size())};
}

}  // namespace

double segment_segment_distance(const Point& a, const Point& b, const Point& c,
                                const Point& d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

const char* to_string(FigureKind k) {
    switch (k) {
        case FigureKind::point: return "point";
        case FigureKind::segment: return "segment";
        case FigureKind::polygon: return "polygon";
    }
    return "?";
}

ConvexFigure convex_hull(const std::vector<Point>& points, double eps_geom) {
    if (points.empty()) throw InvalidInput("convex_hull: empty input");

    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) return ConvexFigure(FigureKind::point, {pts[0]});

    // Monotone chain; popping at cross <= eps drops collinear points, so the
    // vertex set of the result is exactly its extreme-point set.
    const std::size_t n = pts.size();
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= eps_geom) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower_end && cross(h[k - 2], h[k - 1], pts[i]) <= eps_geom) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point repeats the first

    if (h.size() == 2) return ConvexFigure(FigureKind::segment, std::move(h));
    return ConvexFigure(FigureKind::polygon, std::move(h));
}

double perimeter(const ConvexFigure& K) {
    const auto& v = K.vertices();
    switch (K.kind()) {
        case FigureKind::point: return 0.0;
        case FigureKind::segment: return 2.0 * distance(v[0], v[1]);
        case FigureKind::polygon: {
            double sum = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i)
                sum += distance(v[i], v[(i + 1) % v.size()]);
            return sum;
        }
    }
    return 0.0;
}

DiameterInfo diameter(const ConvexFigure& K) {
    const auto& v = K.vertices();
    if (K.kind() == FigureKind::point) return {0.0, v[0], v[0]};
    if (K.kind() == FigureKind::segment) return {distance(v[0], v[1]), v[0], v[1]};

    const std::size_t n = v.size();
    auto nxt = [n](std::size_t i) { return (i + 1) % n; };
    auto edge_dist = [&](std::size_t i, std::size_t j) {
        return std::abs(cross(v[i], v[nxt(i)], v[j]));
    };

    DiameterInfo best{-1.0, v[0], v[0]};
    auto consider = [&](std::size_t i, std::size_t j) {
        const double d = distance(v[i], v[j]);
        if (d > best.value) best = {d, v[i], v[j]};
    };

    // Rotating calipers: per edge, advance the antipodal vertex while it moves
    // away from the edge line; parallel-edge ties are covered by the extra
    // (i, j+1) candidate.
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t guard = 0;
        while (edge_dist(i, nxt(j)) > edge_dist(i, j) && ++guard <= n) j = nxt(j);
        consider(i, j);
        consider(nxt(i), j);
        consider(i, nxt(j));
    }
    return best;
}

double signed_distance(const ConvexFigure& K, const Point& p) {
    const auto& v = K.vertices();
    switch (K.kind()) {
        case FigureKind::point: return distance(p, v[0]);
        case FigureKind::segment: return point_segment_distance(p, v[0], v[1]);
        case FigureKind::polygon: {
            bool inside = true;
            double bd = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < v.size(); ++i) {
                const Point& a = v[i];
                const Point& b = v[(i + 1) % v.size()];
                if (cross(a, b, p) < 0.0) inside = false;
                bd = std::min(bd, point_segment_distance(p, a, b));
            }
            return inside ? -bd : bd;
        }
    }
    return 0.0;
}

bool contains_point(const ConvexFigure& K, const Point& p, const Tolerances& tol) {
    return signed_distance(K, p) <= tol.eps_geom;
}

double segment_figure_distance(const ConvexFigure& K, const Point& a, const Point& b) {
    const auto& v = K.vertices();
    if (K.kind() == FigureKind::point) return point_segment_distance(v[0], a, b);
    if (K.kind() == FigureKind::segment)
        return segment_segment_distance(a, b, v[0], v[1]);
    if (signed_distance(K, a) <= 0.0 || signed_distance(K, b) <= 0.0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        best = std::min(best,
                        segment_segment_distance(a, b, v[i], v[(i + 1) % v.size()]));
    return best;
}

BoundaryProjection project_to_boundary(const ConvexFigure& K, const Point& p) {
    const auto& v = K.vertices();
    if (K.kind() == FigureKind::point) return {0.0, distance(p, v[0]), v[0]};

    // Boundary edges in traversal order; a segment's boundary is the segment
    // itself walked once.
    const std::size_t edge_count =
        K.kind() == FigureKind::segment ? 1 : v.size();
    BoundaryProjection best{0.0, std::numeric_limits<double>::infinity(), v[0]};
    double cum = 0.0;
    for (std::size_t i = 0; i < edge_count; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const Point ab = b - a;
        const double len2 = dot(ab, ab);
        double t = len2 == 0.0 ? 0.0 : std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
        const Point q{a.x + t * ab.x, a.y + t * ab.y};
        const double d = distance(p, q);
        if (d < best.dist) best = {cum + t * std::sqrt(len2), d, q};
        cum += std::sqrt(len2);
    }
    return best;
}

std::size_t find_vertex(const ConvexFigure& K, const Point& p, double eps) {
    const auto& v = K.vertices();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (distance(v[i], p) <= eps) return i;
    return static_cast<std::size_t>(-1);
}

std::array<ConvexFigure, 2> split_by_chord(const ConvexFigure& K, const Point& E,
                                           const Point& F, const Tolerances& tol) {
    constexpr auto npos = static_cast<std::size_t>(-1);
    const std::size_t ie = find_vertex(K, E, tol.eps_geom);
    const std::size_t jf = find_vertex(K, F, tol.eps_geom);
    if (ie == npos || jf == npos)
        throw NotExtremePoint("split_by_chord: chord endpoint is not an extreme point");
    if (ie == jf) throw InvalidInput("split_by_chord: chord endpoints coincide");

    const auto& v = K.vertices();
    const std::size_t n = v.size();
    std::vector<Point> side1, side2;
    for (std::size_t i = ie;; i = (i + 1) % n) {
        side1.push_back(v[i]);
        if (i == jf) break;
    }
    for (std::size_t i = jf;; i = (i + 1) % n) {
        side2.push_back(v[i]);
        if (i == ie) break;
    }
    return {convex_hull(side1, tol.eps_geom), convex_hull(side2, tol.eps_geom)};
}

TangentInfo tangents_from_point(const ConvexFigure& K, const Point& A,
                                const Tolerances& tol) {
    if (signed_distance(K, A) <= tol.eps_geom)
        throw PointNotExternal("tangents_from_point: point is not strictly outside");
    const auto& v = K.vertices();
    if (v.size() < 2)
        throw InvalidInput("tangents_from_point: figure has no tangent wedge");

    // Angles of the vertex directions relative to the direction toward an
    // interior reference point; since A is outside, they span less than pi
    // and the wedge endpoints are the angular extremes.
    const Point O = vertex_centroid(v);
    const double ref = std::atan2(O.y - A.y, O.x - A.x);
    const Point d0{std::cos(ref), std::sin(ref)};

    std::vector<double> phi(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point u = v[i] - A;
        phi[i] = std::atan2(d0.x * u.y - d0.y * u.x, dot(d0, u));
    }
    auto pick_extreme = [&](bool want_min) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (want_min ? phi[i] < phi[best] : phi[i] > phi[best]) best = i;
        // Collinear tie: keep the vertex farthest from A so the support line
        // touches at the surviving hull vertex.
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(phi[i] - phi[best]) <= 1e-9 &&
                distance(v[i], A) > distance(v[best], A))
                best = i;
        return best;
    };
    const std::size_t lo = pick_extreme(true);
    const std::size_t hi = pick_extreme(false);
    const double angle = phi[hi] - phi[lo];
    if (!(angle > 0.0))
        throw InvalidInput("tangents_from_point: degenerate tangent wedge");
    return {v[lo], v[hi], angle};
}

ConvexFigure add_point_hull(const ConvexFigure& K, const Point& A,
                            const Tolerances& tol) {
    std::vector<Point> pts = K.vertices();
    pts.push_back(A);
    return convex_hull(pts, tol.eps_geom);
}

}  // namespace hullcover
