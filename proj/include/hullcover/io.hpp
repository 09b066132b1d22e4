#pragma once

#include <string>
#include <vector>

#include "hullcover/checks.hpp"
#include "hullcover/curve.hpp"
#include "hullcover/geom.hpp"

namespace hullcover {

/// Input file problem; vertex_index locates the offending vertex when one is
/// to blame, -1 otherwise.
struct FileError : Error {
    FileError(const std::string& msg, int index = -1)
        : Error(msg), vertex_index(index) {}
    int vertex_index;
};

/// Parses {"type": "polygon"|"segment"|"point", "vertices": [[x,y],...]}.
/// Vertices may arrive in any rotation or orientation but must all be
/// extreme; the result is canonical.
ConvexFigure parse_figure(const std::string& text, double eps_geom = 1e-9);
ConvexFigure load_figure(const std::string& path, double eps_geom = 1e-9);

/// Canonical serialization; emit(parse(text)) == text for canonical files.
std::string emit_figure(const ConvexFigure& K);

/// Parses {"vertices": [[x,y],...]} with at least two vertices.
Curve parse_curve(const std::string& text);
Curve load_curve(const std::string& path);

std::string emit_curve(const Curve& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Header plus one row per fuzz case:
/// seed,style,n_vertices,length,perimeter,diameter,slack,covered
std::string fuzz_csv(const std::vector<FuzzRow>& rows);

}  // namespace hullcover
