#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hullcover/curve.hpp"
#include "hullcover/geom.hpp"

namespace hullcover {

struct ReproCheck {
    std::string label;
    bool passed = false;
    std::string detail;  // expected vs actual, preformatted
};

/// Self-asserting worked example; carries the geometry so the CLI can render
/// it.
struct ReproReport {
    std::string name;
    std::vector<ReproCheck> checks;
    ConvexFigure figure;
    std::vector<std::pair<std::string, Curve>> curves;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Equilateral triangle: every two-side arc is a shortest covering curve.
ReproReport repro_triangle(const Tolerances& tol);

/// Slanted parallelogram where the shortest covering curve goes non-convex
/// past the crossover slant.
ReproReport repro_parallelogram(double t, const Tolerances& tol);

/// Discretized half-disk: the open arc attains the covering bound exactly.
ReproReport repro_halfdisk(std::size_t n_segments, const Tolerances& tol);

/// Unit square: no boundary chord realizes the diameter, so the bound stays
/// strict.
ReproReport repro_square(const Tolerances& tol);

}  // namespace hullcover
