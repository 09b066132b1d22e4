#include "hullcover/repro.hpp"

#include <cmath>
#include <cstdio>

#include "hullcover/checks.hpp"
#include "hullcover/optimize.hpp"

namespace hullcover {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void check_close(ReproReport& rep, const std::string& label, double actual,
                 double expected, double tol) {
    rep.checks.push_back({label, std::abs(actual - expected) <= tol,
                          "expected " + fmt(expected) + ", got " + fmt(actual) +
                              " (tol " + fmt(tol) + ")"});
}

void check_true(ReproReport& rep, const std::string& label, bool ok,
                const std::string& detail) {
    rep.checks.push_back({label, ok, detail});
}

}  // namespace

ReproReport repro_triangle(const Tolerances& tol) {
    const ConvexFigure K =
        convex_hull({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}, tol.eps_geom);
    ReproReport rep{"triangle", {}, K, {}};

    const double per = perimeter(K);
    const double diam = diameter(K).value;
    check_close(rep, "perimeter", per, 3.0, 1e-12);
    check_close(rep, "diameter", diam, 1.0, 1e-12);
    check_close(rep, "covering bound", per - diam, 2.0, 1e-12);

    // every two-side arc covers and attains the bound
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3;
        const Curve arc = boundary_arc(K, j, i, ArcSide::left);  // the two-edge side
        const CoverageReport cov = covers(arc, K, tol);
        check_true(rep, "two-side arc " + std::to_string(i) + " covers", cov.covered,
                   "max violation " + fmt(cov.max_violation));
        check_close(rep, "two-side arc " + std::to_string(i) + " slack", cov.slack, 0.0,
                    1e-12);
        check_true(rep,
                   "two-side arc " + std::to_string(i) + " equality class",
                   equality_case_check(arc, K, tol) == EqualityCase::equality_valid,
                   "expected equality_valid");
        if (i == 0) rep.curves.emplace_back("two_side_arc", arc);
    }

    OptimizerConfig cfg;
    cfg.n_vertices = 3;
    cfg.restarts = 32;
    cfg.seed = 1;
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
    check_close(rep, "optimized length", res.best_length, 2.0, 1e-4);
    rep.curves.emplace_back("optimized", res.best_curve);
    return rep;
}

ReproReport repro_parallelogram(double t, const Tolerances& tol) {
    if (t < 1.0) throw InvalidInput("repro_parallelogram: need t >= 1");
    const Point A{0.0, 0.0}, B{1.0, 1.0}, C{t + 1.0, 1.0}, D{t, 0.0}, E{t + 1.0, 0.0};
    const ConvexFigure K = convex_hull({A, B, C, D}, tol.eps_geom);
    ReproReport rep{"parallelogram", {}, K, {}};

    const Curve abce({A, B, C, E});
    const Curve abdc({A, B, D, C});
    rep.curves.emplace_back("convex_path", abce);
    rep.curves.emplace_back("nonconvex_path", abdc);

    check_close(rep, "convex path length", abce.length(), 1.0 + std::sqrt(2.0) + t,
                1e-12);
    check_close(rep, "non-convex path length", abdc.length(),
                2.0 * std::sqrt(2.0) + std::sqrt(2.0 - 2.0 * t + t * t), 1e-12);
    check_true(rep, "convex path covers", covers(abce, K, tol).covered, "");
    check_true(rep, "non-convex path covers", covers(abdc, K, tol).covered, "");

    // at the crossover slant both paths have the same length
    const double t_star = (3.0 * std::sqrt(2.0) + 2.0) / 4.0;
    {
        const Point Cs{t_star + 1.0, 1.0}, Ds{t_star, 0.0}, Es{t_star + 1.0, 0.0};
        const Curve abce_s({A, B, Cs, Es});
        const Curve abdc_s({A, B, Ds, Cs});
        check_close(rep, "lengths agree at crossover",
                    abce_s.length() - abdc_s.length(), 0.0, 1e-9);
    }
    if (std::abs(t - t_star) > 1e-6) {
        const bool nonconvex_shorter = abdc.length() < abce.length();
        check_true(rep, "shorter path side matches slant",
                   nonconvex_shorter == (t > t_star),
                   "t = " + fmt(t) + ", crossover at " + fmt(t_star));
    }
    return rep;
}

ReproReport repro_halfdisk(std::size_t n_segments, const Tolerances& tol) {
    if (n_segments < 8 || n_segments % 2 != 0)
        throw InvalidInput("repro_halfdisk: need an even segment count >= 8");

    std::vector<Point> pts;
    for (std::size_t k = 0; k <= n_segments; ++k) {
        const double a = kPi * static_cast<double>(k) / static_cast<double>(n_segments);
        pts.emplace_back(std::cos(a), std::sin(a));
    }
    const ConvexFigure K = convex_hull(pts, tol.eps_geom);
    ReproReport rep{"halfdisk", {}, K, {}};
    check_true(rep, "figure keeps all arc vertices",
               K.vertex_count() == n_segments + 1, "");

    const Curve arc(pts);  // from (1,0) over the top to (-1,0)
    rep.curves.emplace_back("arc", arc);

    const double diam = diameter(K).value;
    check_close(rep, "diameter equals endpoint chord", diam,
                distance(arc.front(), arc.back()), 1e-12);
    check_close(rep, "diameter", diam, 2.0, 1e-12);

    const CoverageReport cov = covers(arc, K, tol);
    check_true(rep, "arc covers", cov.covered, "");
    check_close(rep, "arc slack", cov.slack, 0.0, 1e-12);
    check_true(rep, "equality class",
               equality_case_check(arc, K, tol) == EqualityCase::equality_valid,
               "expected equality_valid");

    const double m = static_cast<double>(n_segments);
    check_close(rep, "arc length matches inscribed formula", arc.length(),
                2.0 * m * std::sin(kPi / (2.0 * m)), 1e-12);
    if (n_segments == 256)
        check_close(rep, "arc length near pi", arc.length(), kPi, 2e-4);
    return rep;
}

ReproReport repro_square(const Tolerances& tol) {
    const ConvexFigure K =
        convex_hull({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, tol.eps_geom);
    ReproReport rep{"square", {}, K, {}};

    const double bound = perimeter(K) - diameter(K).value;
    check_close(rep, "covering bound", bound, 4.0 - std::sqrt(2.0), 1e-12);

    const ArcCandidate arc = boundary_arc_candidates(K, tol);
    check_close(rep, "best boundary arc", arc.length, 3.0, 1e-12);
    rep.curves.emplace_back("boundary_arc", arc.curve);

    OptimizerConfig cfg;
    cfg.n_vertices = 4;
    cfg.restarts = 16;
    cfg.seed = 1;
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
    rep.curves.emplace_back("optimized", res.best_curve);

    const double delta = res.best_length - bound;
    check_true(rep, "optimized length above bound", delta > 0.0,
               "margin " + fmt(delta));
    check_true(rep, "optimized length at most best arc",
               res.best_length <= 3.0 + 1e-9, "got " + fmt(res.best_length));
    check_true(rep, "equality class strict",
               equality_case_check(res.best_curve, K, tol) == EqualityCase::strict,
               "slack " + fmt(res.best_length - bound));
    return rep;
}

}  // namespace hullcover
