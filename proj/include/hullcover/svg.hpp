#pragma once

#include <string>
#include <vector>

#include "hullcover/curve.hpp"
#include "hullcover/geom.hpp"

namespace hullcover {

/// Collects filled figures and stroked polylines, then emits a standalone
/// SVG whose viewBox fits the content with a 5% margin (y axis up).
class SvgScene {
  public:
    void add_figure(const ConvexFigure& K, const std::string& fill = "#dbe9f6",
                    const std::string& stroke = "#4a78a8");
    void add_polyline(const std::vector<Point>& pts, const std::string& stroke,
                      double width_scale = 1.0, const std::string& dash = "");
    void add_curve(const Curve& c, const std::string& stroke = "#c23b22");
    void add_dashed_hull(const ConvexFigure& K, const std::string& stroke = "#7a7a7a");
    void add_dotted_segment(const Point& a, const Point& b,
                            const std::string& stroke = "#2d7d46");

    std::string str() const;

  private:
    struct Shape {
        bool closed_fill = false;
        std::vector<Point> pts;
        std::string fill;
        std::string stroke;
        std::string dash;  // in units of the base stroke width
        double width_scale = 1.0;
    };
    std::vector<Shape> shapes_;
};

/// The standard composition used by the CLI: figure filled, curve stroked,
/// hull of the curve dashed, endpoint chord dotted.
std::string render_scene(const ConvexFigure* figure, const Curve* curve,
                         const Tolerances& tol);

}  // namespace hullcover
