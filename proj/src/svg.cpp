#include "hullcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hullcover {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void SvgScene::add_figure(const ConvexFigure& K, const std::string& fill,
                          const std::string& stroke) {
    shapes_.push_back({true, K.vertices(), fill, stroke, "", 1.0});
}

void SvgScene::add_polyline(const std::vector<Point>& pts, const std::string& stroke,
                            double width_scale, const std::string& dash) {
    shapes_.push_back({false, pts, "none", stroke, dash, width_scale});
}

void SvgScene::add_curve(const Curve& c, const std::string& stroke) {
    add_polyline(c.vertices(), stroke, 1.6);
}

void SvgScene::add_dashed_hull(const ConvexFigure& K, const std::string& stroke) {
    std::vector<Point> pts = K.vertices();
    if (K.kind() == FigureKind::polygon) pts.push_back(pts.front());
    add_polyline(pts, stroke, 0.8, "3 2");
}

void SvgScene::add_dotted_segment(const Point& a, const Point& b,
                                  const std::string& stroke) {
    add_polyline({a, b}, stroke, 0.8, "1 2");
}

std::string SvgScene::str() const {
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    bool first = true;
    for (const Shape& s : shapes_) {
        for (const Point& p : s.pts) {
            if (first) {
                min_x = max_x = p.x;
                min_y = max_y = p.y;
                first = false;
            }
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
    const double margin = 0.05 * span;
    const double stroke_w = 0.008 * span;
    // flip y inside the box so the math orientation is preserved
    const double y_sum = min_y + max_y;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << fmt(min_x - margin) << " " << fmt(min_y - margin) << " "
        << fmt(max_x - min_x + 2.0 * margin) << " " << fmt(max_y - min_y + 2.0 * margin)
        << "\">\n";
    for (const Shape& s : shapes_) {
        out << (s.closed_fill ? "  <polygon" : "  <polyline") << " points=\"";
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            if (i) out << " ";
            out << fmt(s.pts[i].x) << "," << fmt(y_sum - s.pts[i].y);
        }
        out << "\" fill=\"" << s.fill << "\" stroke=\"" << s.stroke
            << "\" stroke-width=\"" << fmt(stroke_w * s.width_scale) << "\"";
        if (!s.dash.empty()) {
            out << " stroke-dasharray=\"";
            // dash pattern scales with the stroke width
            std::istringstream in(s.dash);
            double u;
            bool first_u = true;
            while (in >> u) {
                if (!first_u) out << " ";
                out << fmt(u * stroke_w);
                first_u = false;
            }
            out << "\"";
        }
        out << " stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_scene(const ConvexFigure* figure, const Curve* curve,
                         const Tolerances& tol) {
    SvgScene scene;
    if (figure) scene.add_figure(*figure);
    if (curve) {
        scene.add_dashed_hull(hull_of_curve(*curve, tol));
        scene.add_curve(*curve);
        scene.add_dotted_segment(curve->front(), curve->back());
    }
    return scene.str();
}

}  // namespace hullcover
