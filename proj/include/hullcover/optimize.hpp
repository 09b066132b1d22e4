#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hullcover/curve.hpp"
#include "hullcover/geom.hpp"

namespace hullcover {

struct OptimizerConfig {
    std::size_t n_vertices = 4;
    std::size_t restarts = 32;
    double penalty_init = 10.0;
    double penalty_growth = 10.0;
    std::size_t penalty_rounds = 4;
    std::size_t max_iters_per_round = 2000;
    double step_tolerance = 1e-10;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Necessary conditions a shortest covering curve must satisfy, evaluated on
/// a candidate.
struct OptimalityReport {
    bool start_extreme = false;  // endpoints are hull vertices
    bool end_extreme = false;
    bool chord_meets_figure = false;  // [A,B] intersects K
    // length + d(first contact, last contact) - per(hull); nonnegative for a
    // near-minimal candidate.
    double contact_chord_residual = 0.0;
    // |angle - pi/2| between the initial curve run and the other hull edge at
    // an endpoint lying outside K; absent when the endpoint is in K.
    std::optional<double> start_right_angle_residual;
    std::optional<double> end_right_angle_residual;
    // Chords of hull-extreme curve points either lie on the hull boundary or
    // cut it into two parts that both meet K beyond the chord.
    bool division_condition_ok = false;
};

struct OptimizationResult {
    Curve best_curve;
    double best_length = 0.0;
    double lower_bound = 0.0;  // per(K) - diam(K)
    std::vector<double> per_restart_lengths;
    OptimalityReport report;
};

/// Exact-penalty relaxation: length plus lambda times the squared coverage
/// violations of K's vertices against hull(c).
double objective(const Curve& c, const ConvexFigure& K, double lambda,
                 const Tolerances& tol);

struct ArcCandidate {
    Curve curve;
    double length = 0.0;
};

/// Shortest covering boundary arc over all vertex pairs and both sides; an
/// upper bound for the minimal covering curve and the structured restart seed.
ArcCandidate boundary_arc_candidates(const ConvexFigure& K, const Tolerances& tol);

/// Multi-start simplex descent with penalty continuation at a fixed vertex
/// budget, then coverage repair and local polish. Deterministic per seed.
OptimizationResult minimize_covering_curve(const ConvexFigure& K,
                                           const OptimizerConfig& cfg,
                                           const Tolerances& tol);

OptimalityReport optimality_report(const Curve& c, const ConvexFigure& K,
                                   const Tolerances& tol);

}  // namespace hullcover
