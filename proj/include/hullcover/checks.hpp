#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullcover/curve.hpp"
#include "hullcover/geom.hpp"

namespace hullcover {

// ---------------------------------------------------------------------------
// Inequality and equality checkers

/// Verifies length(c) >= per(K) - diam(K) for a covering curve. Throws
/// NotCovering when the hull of c misses K, TheoremViolation when the slack
/// is below -eps_eq (which would contradict the covering bound).
CoverageReport main_inequality_check(const Curve& c, const ConvexFigure& K,
                                     const Tolerances& tol);

enum class EqualityCase { strict, equality_valid, equality_violates_characterization };

const char* to_string(EqualityCase e);

/// Classifies a covering curve against the equality characterization: slack
/// zero exactly when the curve is a convex boundary arc of K whose endpoint
/// chord realizes the diameter.
EqualityCase equality_case_check(const Curve& c, const ConvexFigure& K,
                                 const Tolerances& tol);

/// length(closed polyline) - per(hull); nonnegative, zero only for a convex
/// traversal of the hull boundary.
double closed_curve_check(const Curve& c, const Tolerances& tol);

/// per(K2) - per(K1) for nested figures K1 inside K2; throws NotNested.
double monotonicity_check(const ConvexFigure& K1, const ConvexFigure& K2,
                          const Tolerances& tol);

/// Slack of d(A,A1) + per(K) > per(hull(K u {A})) under a right tangent
/// wedge at A. Uses the shorter tangent leg, which still keeps the
/// inequality strict.
double add_point_inequality_check(const ConvexFigure& K, const Point& A,
                                  const Tolerances& tol);

/// True when every curve vertex sits on bd(hull) and the boundary
/// coordinates advance monotonically in one direction. dist_tol overrides
/// the on-boundary threshold (defaults to eps_contact).
bool is_convex_boundary_traversal(const Curve& c, const ConvexFigure& hull,
                                  const Tolerances& tol, double dist_tol = -1.0);

/// Max over both vertex sets of the distance to the other figure's boundary.
double figure_discrepancy(const ConvexFigure& A, const ConvexFigure& B);

// ---------------------------------------------------------------------------
// Seeded generators

ConvexFigure random_convex_polygon(std::size_t n, std::uint64_t seed);

enum class CurveStyle { boundary_perturb, vertex_tour, arc_plus_noise };

const char* to_string(CurveStyle s);

Curve random_covering_curve(const ConvexFigure& K, std::uint64_t seed, CurveStyle style);

/// Closed random polyline on n points in the unit disk (first vertex repeated
/// at the end).
Curve random_closed_polyline(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fuzz campaign

struct FuzzRow {
    std::uint64_t seed = 0;
    CurveStyle style = CurveStyle::boundary_perturb;
    std::size_t n_vertices = 0;
    double length = 0.0;
    double perimeter = 0.0;
    double diameter = 0.0;
    double slack = 0.0;
    bool covered = false;
};

struct FuzzOutcome {
    std::vector<FuzzRow> rows;
    std::vector<std::string> violations;  // empty on success
};

/// One seeded case: a random polygon, a covering curve over it, plus a closed
/// polyline and a nested pair derived from the same seed. Violation messages
/// carry the offending seed.
void run_fuzz_case(std::uint64_t case_seed, CurveStyle style, const Tolerances& tol,
                   FuzzOutcome& out);

/// count cases cycling through the generator styles.
FuzzOutcome run_fuzz_campaign(std::size_t count, std::uint64_t seed,
                              const Tolerances& tol);

}  // namespace hullcover
