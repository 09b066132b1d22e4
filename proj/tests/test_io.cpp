#include <doctest.h>

#include <string>
#include <vector>

#include "hullcover/io.hpp"
#include "hullcover/svg.hpp"

using namespace hullcover;

namespace {

const Tolerances tol;

// minimal well-formedness check: every opened tag closes in order
bool xml_balanced(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = text.find('<', i)) != std::string::npos) {
        const std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
        if (tag.back() == '/') continue;  // self-closing
        if (tag[0] == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

}  // namespace

TEST_CASE("figure files round trip byte-identically") {
    const std::string canonical = emit_figure(
        convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(emit_figure(parse_figure(canonical)) == canonical);

    const std::string seg = emit_figure(convex_hull({{0.5, -1.25}, {2, 0}}));
    CHECK(emit_figure(parse_figure(seg)) == seg);

    // awkward but representable coordinates survive the trip
    const std::string odd = emit_figure(
        convex_hull({{0.1, 0.2}, {1e-3, 7.0 / 3.0}, {-5.5, 1e20 * 1e-19}}));
    CHECK(emit_figure(parse_figure(odd)) == odd);
}

TEST_CASE("figure parsing accepts rotations and rejects bad input") {
    // clockwise order is fine, canonicalization reorders
    const ConvexFigure K = parse_figure(
        R"({"type": "polygon", "vertices": [[0,1],[1,1],[1,0],[0,0]]})");
    CHECK(K.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    CHECK_THROWS_AS(parse_figure("not json"), FileError);
    CHECK_THROWS_AS(parse_figure(R"({"vertices": [[0,0]]})"), FileError);
    CHECK_THROWS_AS(parse_figure(R"({"type": "blob", "vertices": [[0,0]]})"), FileError);
    // declared polygon but collinear
    CHECK_THROWS_AS(
        parse_figure(R"({"type": "polygon", "vertices": [[0,0],[1,0],[2,0]]})"),
        FileError);

    // the offending vertex is located
    try {
        parse_figure(
            R"({"type": "polygon", "vertices": [[0,0],[1,0],[0.2,0.1],[0,1]]})");
        FAIL("expected FileError");
    } catch (const FileError& e) {
        CHECK(e.vertex_index == 2);
    }
    try {
        parse_figure(R"({"type": "polygon", "vertices": [[0,0],[1,null],[0,1]]})");
        FAIL("expected FileError");
    } catch (const FileError& e) {
        CHECK(e.vertex_index == 1);
    }
}

TEST_CASE("curve files parse and emit") {
    const Curve c = parse_curve(R"({"vertices": [[0,0],[1,0],[1,1]]})");
    CHECK(c.vertex_count() == 3);
    const std::string canonical = emit_curve(c);
    CHECK(emit_curve(parse_curve(canonical)) == canonical);

    CHECK_THROWS_AS(parse_curve(R"({"vertices": [[0,0]]})"), FileError);
    CHECK_THROWS_AS(parse_curve(R"({"vertices": [[0,0],[1]]})"), FileError);
    CHECK_THROWS_AS(parse_curve(R"({})"), FileError);
}

TEST_CASE("fuzz csv layout") {
    std::vector<FuzzRow> rows(3);
    rows[0] = {7, CurveStyle::vertex_tour, 5, 1.0, 2.0, 0.5, 0.25, true};
    const std::string csv = fuzz_csv(rows);
    CHECK(count_occurrences(csv, "\n") == 4);  // header + 3 rows
    CHECK(csv.rfind("seed,style,n_vertices,length,perimeter,diameter,slack,covered\n",
                    0) == 0);
    CHECK(fuzz_csv({}) ==
          "seed,style,n_vertices,length,perimeter,diameter,slack,covered\n");
}

TEST_CASE("svg output shape") {
    const ConvexFigure K = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    const std::string figure_only = render_scene(&K, nullptr, tol);
    CHECK(xml_balanced(figure_only));
    CHECK(count_occurrences(figure_only, "<polygon") == 1);
    CHECK(count_occurrences(figure_only, "<polyline") == 0);
    CHECK(figure_only.find("viewBox=") != std::string::npos);

    const Curve c({{0, 1}, {0, 0}, {1, 0}, {1, 1}});
    const std::string with_curve = render_scene(&K, &c, tol);
    CHECK(xml_balanced(with_curve));
    // hull (dashed), curve, endpoint chord (dotted)
    CHECK(count_occurrences(with_curve, "<polyline") == 3);
    CHECK(count_occurrences(with_curve, "stroke-dasharray") == 2);
}
