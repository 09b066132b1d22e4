#include "hullcover/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hullcover {

namespace {

using nlohmann::json;

std::vector<Point> parse_vertex_array(const json& arr) {
    if (!arr.is_array()) throw FileError("\"vertices\" must be an array");
    std::vector<Point> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& v = arr[i];
        const int idx = static_cast<int>(i);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw FileError("vertex " + std::to_string(i) + " is not an [x, y] pair",
                            idx);
        const double x = v[0].get<double>();
        const double y = v[1].get<double>();
        if (!std::isfinite(x) || !std::isfinite(y))
            throw FileError("vertex " + std::to_string(i) + " is not finite", idx);
        out.emplace_back(x, y);
    }
    return out;
}

json vertices_to_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw FileError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

ConvexFigure parse_figure(const std::string& text, double eps_geom) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("type") || !doc.contains("vertices"))
        throw FileError("figure file needs \"type\" and \"vertices\"");
    const std::string type = doc["type"].is_string() ? doc["type"].get<std::string>() : "";
    FigureKind want;
    if (type == "polygon")
        want = FigureKind::polygon;
    else if (type == "segment")
        want = FigureKind::segment;
    else if (type == "point")
        want = FigureKind::point;
    else
        throw FileError("figure type must be polygon, segment or point, got \"" +
                        type + "\"");

    const std::vector<Point> pts = parse_vertex_array(doc["vertices"]);
    if (pts.empty()) throw FileError("figure needs at least one vertex");

    const ConvexFigure K = convex_hull(pts, eps_geom);
    if (K.kind() != want)
        throw FileError(std::string("vertices form a ") + to_string(K.kind()) +
                        ", not a " + type);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (find_vertex(K, pts[i], eps_geom) == static_cast<std::size_t>(-1))
            throw FileError("vertex " + std::to_string(i) +
                                " is not an extreme point of the figure",
                            static_cast<int>(i));
    return K;
}

std::string emit_figure(const ConvexFigure& K) {
    json doc;
    doc["type"] = to_string(K.kind());
    doc["vertices"] = vertices_to_json(K.vertices());
    return doc.dump(2) + "\n";
}

Curve parse_curve(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("vertices"))
        throw FileError("curve file needs \"vertices\"");
    std::vector<Point> pts = parse_vertex_array(doc["vertices"]);
    if (pts.size() < 2) throw FileError("curve needs at least two vertices");
    return Curve(std::move(pts));
}

std::string emit_curve(const Curve& c) {
    json doc;
    doc["vertices"] = vertices_to_json(c.vertices());
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path);
    out << content;
}

ConvexFigure load_figure(const std::string& path, double eps_geom) {
    try {
        return parse_figure(read_file(path), eps_geom);
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what(), e.vertex_index);
    }
}

Curve load_curve(const std::string& path) {
    try {
        return parse_curve(read_file(path));
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what(), e.vertex_index);
    }
}

std::string fuzz_csv(const std::vector<FuzzRow>& rows) {
    std::string out = "seed,style,n_vertices,length,perimeter,diameter,slack,covered\n";
    char buf[256];
    for (const FuzzRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%llu,%s,%zu,%.17g,%.17g,%.17g,%.17g,%d\n",
                      static_cast<unsigned long long>(r.seed), to_string(r.style),
                      r.n_vertices, r.length, r.perimeter, r.diameter, r.slack,
                      r.covered ? 1 : 0);
        out += buf;
    }
    return out;
}

}  // namespace hullcover
