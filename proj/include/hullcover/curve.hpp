#pragma once

#include <vector>

#include "hullcover/geom.hpp"

namespace hullcover {

/// Open polyline with a cached arc-length table. The degenerate repeated
/// single point is allowed and has length zero.
class Curve {
  public:
    explicit Curve(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<double>& cumulative_lengths() const { return cumulative_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const Point& front() const { return vertices_.front(); }
    const Point& back() const { return vertices_.back(); }
    double length() const { return cumulative_.back(); }
    bool closed() const { return vertices_.front() == vertices_.back(); }

  private:
    std::vector<Point> vertices_;
    std::vector<double> cumulative_;
};

double curve_length(const Curve& c);

/// Point at arc length s, 0 <= s <= length.
Point point_at(const Curve& c, double s);

ConvexFigure hull_of_curve(const Curve& c, const Tolerances& tol);

/// Inserts k midpoints into every segment; geometry and length unchanged.
Curve subdivide(const Curve& c, int k);

/// n points evenly spaced in arc length; endpoints preserved, interior
/// vertices are not.
Curve resample_by_arclength(const Curve& c, std::size_t n);

/// Grows the vertex count to n by midpoint-splitting the longest segment;
/// geometry and length unchanged. Falls back to arc-length resampling when
/// the curve already has more than n vertices.
Curve lift_to(const Curve& c, std::size_t n);

struct CoverageReport {
    bool covered = false;
    double max_violation = 0.0;
    double curve_length = 0.0;
    double figure_perimeter = 0.0;
    double figure_diameter = 0.0;
    double slack = 0.0;  // curve_length - (perimeter - diameter)
};

/// Does the hull of c contain K? Decided on the vertices of K, which carry
/// the whole figure.
CoverageReport covers(const Curve& c, const ConvexFigure& K, const Tolerances& tol);

enum class ArcSide { left, right };  // left walks counterclockwise from i to j

/// Boundary polyline of a polygon from vertex i to vertex j on the chosen
/// side; the two sides partition the boundary.
Curve boundary_arc(const ConvexFigure& K, std::size_t i, std::size_t j, ArcSide side);

}  // namespace hullcover
