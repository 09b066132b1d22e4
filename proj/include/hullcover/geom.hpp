#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullcover {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct NotExtremePoint : Error {
    using Error::Error;
};
struct PointNotExternal : Error {
    using Error::Error;
};
struct NotCovering : Error {
    using Error::Error;
};
struct NotNested : Error {
    using Error::Error;
};
struct AngleNotRight : Error {
    using Error::Error;
};
struct OptimizationFailed : Error {
    using Error::Error;
};
// Raised when a computation contradicts a proven inequality; indicates a bug.
struct TheoremViolation : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Primitives

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py))
            throw InvalidInput("point coordinates must be finite");
    }

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double distance(const Point& p, const Point& q);
double dot(Point a, Point b);

// Cross product of (b - a) x (c - a); positive when a,b,c turn counterclockwise.
double cross(const Point& a, const Point& b, const Point& c);

double point_segment_distance(const Point& p, const Point& a, const Point& b);
double segment_segment_distance(const Point& a, const Point& b, const Point& c,
                                const Point& d);

/// Per-operation slack thresholds. eps_geom governs orientation and
/// containment, eps_contact the curve-touches-figure tests, eps_eq the
/// equality classification.
struct Tolerances {
    double eps_geom = 1e-9;
    double eps_contact = 1e-7;
    double eps_eq = 1e-6;

    void validate() const {
        if (!(eps_geom > 0 && eps_contact > 0 && eps_eq > 0))
            throw InvalidInput("tolerances must be strictly positive");
        if (!(eps_geom <= eps_contact && eps_contact <= eps_eq))
            throw InvalidInput("tolerances must satisfy eps_geom <= eps_contact <= eps_eq");
    }
};

// ---------------------------------------------------------------------------
// Convex figures

enum class FigureKind { point, segment, polygon };

const char* to_string(FigureKind k);

/// Canonical convex figure: a point, a segment, or a strictly convex polygon
/// in counterclockwise order whose first vertex is the lexicographically
/// smallest. The vertex list is exactly the extreme-point set.
class ConvexFigure {
  public:
    FigureKind kind() const { return kind_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    friend bool operator==(const ConvexFigure& a, const ConvexFigure& b) {
        return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
    }

  private:
    ConvexFigure(FigureKind k, std::vector<Point> v)
        : kind_(k), vertices_(std::move(v)) {}

    FigureKind kind_ = FigureKind::point;
    std::vector<Point> vertices_;

    friend ConvexFigure convex_hull(const std::vector<Point>& points, double eps_geom);
};

/// Monotone-chain hull with an eps_geom dead zone on the orientation
/// predicate; collinear points are dropped so the result is canonical.
ConvexFigure convex_hull(const std::vector<Point>& points, double eps_geom = 1e-9);

/// Boundary length; a segment counts doubled, a point counts zero.
double perimeter(const ConvexFigure& K);

struct DiameterInfo {
    double value = 0.0;
    Point a;
    Point b;
};

/// Largest pairwise distance and one achieving pair (rotating calipers for
/// polygons).
DiameterInfo diameter(const ConvexFigure& K);

/// Distance to the boundary, negative inside, positive outside, zero on it.
double signed_distance(const ConvexFigure& K, const Point& p);

bool contains_point(const ConvexFigure& K, const Point& p, const Tolerances& tol);

/// Distance from segment [a,b] to the figure (zero when they intersect).
double segment_figure_distance(const ConvexFigure& K, const Point& a, const Point& b);

/// Boundary point nearest to p with its arc-length coordinate
/// (counterclockwise from vertex 0) and distance.
struct BoundaryProjection {
    double arc_coord = 0.0;
    double dist = 0.0;
    Point closest;
};
BoundaryProjection project_to_boundary(const ConvexFigure& K, const Point& p);

/// Index of the figure vertex within eps of p, or npos.
std::size_t find_vertex(const ConvexFigure& K, const Point& p, double eps);

/// Splits K along the chord [E,F] joining two of its extreme points. Returns
/// the hulls of the two vertex chains, first the one counterclockwise from E
/// to F. A chord along an edge yields that edge as a degenerate side.
std::array<ConvexFigure, 2> split_by_chord(const ConvexFigure& K, const Point& E,
                                           const Point& F, const Tolerances& tol);

struct TangentInfo {
    Point a1;     // tangency vertices; the figure lies inside the wedge
    Point a2;
    double angle = 0.0;  // angle a1-A-a2, in (0, pi)
};

/// Support points of K seen from an external point A and the wedge angle.
TangentInfo tangents_from_point(const ConvexFigure& K, const Point& A,
                                const Tolerances& tol);

ConvexFigure add_point_hull(const ConvexFigure& K, const Point& A,
                            const Tolerances& tol);

}  // namespace hullcover
