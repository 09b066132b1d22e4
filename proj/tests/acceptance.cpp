// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hullcover/checks.hpp"
#include "hullcover/optimize.hpp"
#include "hullcover/repro.hpp"
#include "hullcover/rng.hpp"
#include "oracles.hpp"

using namespace hullcover;

namespace {

const Tolerances tol;

struct Criterion {
    std::string name;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void require_close(double actual, double expected, double eps,
                       const std::string& what) {
        if (!(std::abs(actual - expected) <= eps))
            failures.push_back(what + ": expected " + std::to_string(expected) +
                               ", got " + std::to_string(actual));
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ConvexFigure unit_square() {
    return convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

void criterion_triangle(Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConvexFigure K =
        convex_hull({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    c.require_close(perimeter(K), 3.0, 1e-12, "perimeter");
    c.require_close(diameter(K).value, 1.0, 1e-12, "diameter");
    c.require_close(perimeter(K) - diameter(K).value, 2.0, 1e-12, "bound");

    for (std::size_t i = 0; i < 3; ++i) {
        const Curve arc = boundary_arc(K, (i + 1) % 3, i, ArcSide::left);
        const CoverageReport rep = covers(arc, K, tol);
        c.require(rep.covered, "two-side arc covers");
        c.require_close(rep.slack, 0.0, 1e-12, "two-side arc slack");
    }

    OptimizerConfig cfg;
    cfg.n_vertices = 3;
    cfg.restarts = 32;
    cfg.seed = 1;
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
    c.require_close(res.best_length, 2.0, 1e-4, "optimizer length");

    const double secs = seconds_since(t0);
    c.require(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s");
}

void criterion_parallelogram(Criterion& c) {
    const double t = 2.0;
    const Point A{0, 0}, B{1, 1}, C{t + 1, 1}, D{t, 0}, E{t + 1, 0};
    const ConvexFigure K = convex_hull({A, B, C, D});

    const Curve abdc({A, B, D, C});
    const Curve abce({A, B, C, E});
    c.require_close(abdc.length(), 3.0 * std::sqrt(2.0), 1e-12, "vertex path length");
    c.require_close(abce.length(), 3.0 + std::sqrt(2.0), 1e-12, "convex path length");
    c.require(covers(abdc, K, tol).covered, "vertex path covers");
    c.require(covers(abce, K, tol).covered, "convex path covers");
    c.require_close(abce.length() - abdc.length(), 3.0 - 2.0 * std::sqrt(2.0), 1e-9,
                    "length difference");

    const double ts = (3.0 * std::sqrt(2.0) + 2.0) / 4.0;
    const Curve abce_s({A, B, {ts + 1, 1}, {ts + 1, 0}});
    const Curve abdc_s({A, B, {ts, 0}, {ts + 1, 1}});
    c.require_close(abce_s.length(), abdc_s.length(), 1e-9, "crossover equality");

    OptimizerConfig cfg;
    cfg.n_vertices = 4;
    cfg.restarts = 16;
    cfg.seed = 3;
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
    c.require(res.best_length <= 3.0 * std::sqrt(2.0) + 1e-4,
              "optimizer length " + std::to_string(res.best_length) +
                  " exceeds 3*sqrt(2)+1e-4");
}

void criterion_halfdisk(Criterion& c) {
    std::vector<Point> pts;
    for (int k = 0; k <= 256; ++k) {
        const double a = M_PI * k / 256.0;
        pts.emplace_back(std::cos(a), std::sin(a));
    }
    const ConvexFigure K = convex_hull(pts);
    const Curve arc(pts);

    const CoverageReport rep = covers(arc, K, tol);
    c.require(rep.covered, "arc covers");
    c.require_close(arc.length(), rep.figure_perimeter - rep.figure_diameter, 1e-12,
                    "arc length equals per - diam");
    c.require(equality_case_check(arc, K, tol) == EqualityCase::equality_valid,
              "equality classification");
    c.require_close(arc.length(), M_PI, 2e-4, "arc length near pi");
}

void criterion_square(Criterion& c) {
    const ConvexFigure K = unit_square();
    const double bound = perimeter(K) - diameter(K).value;
    c.require_close(bound, 4.0 - std::sqrt(2.0), 1e-12, "bound");

    const ArcCandidate arc = boundary_arc_candidates(K, tol);
    c.require_close(arc.length, 3.0, 1e-12, "best boundary arc");

    OptimizerConfig cfg;
    cfg.n_vertices = 4;
    cfg.restarts = 16;
    cfg.seed = 1;
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
    c.require(res.best_length >= bound - 1e-9,
              "result below bound: " + std::to_string(res.best_length));
    c.require(res.best_length <= 3.0 + 1e-9,
              "result above best arc: " + std::to_string(res.best_length));
    c.require(equality_case_check(res.best_curve, K, tol) == EqualityCase::strict,
              "classification is strict");
}

void criterion_property_campaign(Criterion& c) {
    const auto t0 = std::chrono::steady_clock::now();
    // each case carries a covering-curve check, a closed polyline and a
    // nested pair, so this runs all three 10k campaigns
    const FuzzOutcome out = run_fuzz_campaign(10000, 42, tol);
    c.require(out.rows.size() == 10000, "case count");
    for (const std::string& v : out.violations) c.require(false, v);
    for (const FuzzRow& r : out.rows) {
        if (!r.covered) {
            c.require(false, "coverage soundness, seed " + std::to_string(r.seed));
            break;
        }
        if (r.slack < -1e-9) {
            c.require(false, "main inequality, seed " + std::to_string(r.seed));
            break;
        }
        if (r.length < 0.5 * r.perimeter - 1e-9) {
            c.require(false, "half-perimeter bound, seed " + std::to_string(r.seed));
            break;
        }
    }
    const double secs = seconds_since(t0);
    c.require(secs < 180.0, "runtime " + std::to_string(secs) + "s exceeds 3 minutes");
}

void criterion_diameter_oracle(Criterion& c) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        // alternate generators: hulls of disk samples and polygons in convex
        // position with up to 200 vertices
        const ConvexFigure K =
            i % 2 == 0 ? random_convex_polygon(3 + i % 198, mix_seed(61, i))
                       : oracle::circle_polygon(3 + i % 198, mix_seed(62, i));
        const double fast = diameter(K).value;
        const double slow = oracle::diameter(K);
        if (std::abs(fast - slow) > 1e-12 * slow) {
            c.require(false, "calipers mismatch at polygon " + std::to_string(i) +
                                 ": " + std::to_string(fast) + " vs " +
                                 std::to_string(slow));
            return;
        }
    }
}

void criterion_necessary_conditions(Criterion& c) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const ConvexFigure K = random_convex_polygon(6 + i % 19, mix_seed(71, i));
        OptimizerConfig cfg;
        cfg.n_vertices = 4 + i % 3;
        cfg.restarts = 6;
        cfg.penalty_rounds = 3;
        cfg.max_iters_per_round = 400;
        cfg.seed = i;
        const OptimizationResult res = minimize_covering_curve(K, cfg, tol);
        const OptimalityReport& rep = res.report;
        const std::string tag = " (polygon " + std::to_string(i) + ")";
        c.require(rep.start_extreme && rep.end_extreme, "endpoint extremality" + tag);
        c.require(rep.chord_meets_figure, "chord meets figure" + tag);
        c.require(rep.contact_chord_residual >= -1e-6,
                  "contact chord residual " +
                      std::to_string(rep.contact_chord_residual) + tag);
        if (!c.failures.empty()) return;
    }
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"triangle equality family", criterion_triangle},
        {"parallelogram crossover", criterion_parallelogram},
        {"half-disk equality family", criterion_halfdisk},
        {"square strictness", criterion_square},
        {"property campaign (3 x 10k cases)", criterion_property_campaign},
        {"rotating-calipers oracle equivalence", criterion_diameter_oracle},
        {"necessary-condition certification", criterion_necessary_conditions},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c{criteria[i].first, {}};
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        std::printf("[%s] %zu. %s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str());
        for (const std::string& f : c.failures) std::printf("       - %s\n", f.c_str());
        if (!ok) ++failed;
    }
    return failed;
}
