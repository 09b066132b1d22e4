#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hullcover/checks.hpp"
#include "hullcover/io.hpp"
#include "hullcover/optimize.hpp"
#include "hullcover/repro.hpp"
#include "hullcover/svg.hpp"

namespace {

using namespace hullcover;

// exit codes: 0 ok, 1 bad input, 2 not covering, 3 internal invariant broken,
// 4 optimization failed, 5 fuzz violations
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNotCovering = 2;
constexpr int kExitViolation = 3;
constexpr int kExitOptimizationFailed = 4;
constexpr int kExitFuzzFailure = 5;

void print_report(const CoverageReport& r) {
    std::printf("covered            %s\n", r.covered ? "yes" : "no");
    if (!r.covered) std::printf("max violation      %.12g\n", r.max_violation);
    std::printf("curve length       %.12g\n", r.curve_length);
    std::printf("figure perimeter   %.12g\n", r.figure_perimeter);
    std::printf("figure diameter    %.12g\n", r.figure_diameter);
    std::printf("bound (per - diam) %.12g\n", r.figure_perimeter - r.figure_diameter);
    std::printf("slack              %.12g\n", r.slack);
}

void print_optimality(const OptimalityReport& rep) {
    std::printf("endpoints extreme      %s / %s\n", rep.start_extreme ? "yes" : "no",
                rep.end_extreme ? "yes" : "no");
    std::printf("chord meets figure     %s\n", rep.chord_meets_figure ? "yes" : "no");
    std::printf("contact chord residual %.12g\n", rep.contact_chord_residual);
    auto angle = [](const std::optional<double>& v) {
        return v ? std::to_string(*v) : std::string("n/a (endpoint in figure)");
    };
    std::printf("right-angle residuals  %s / %s\n",
                angle(rep.start_right_angle_residual).c_str(),
                angle(rep.end_right_angle_residual).c_str());
    std::printf("division condition     %s\n", rep.division_condition_ok ? "ok" : "violated");
}

int run_verify(const std::string& figure_path, const std::string& curve_path,
               const Tolerances& tol) {
    const ConvexFigure K = load_figure(figure_path, tol.eps_geom);
    const Curve c = load_curve(curve_path);
    const CoverageReport r = covers(c, K, tol);
    print_report(r);
    if (!r.covered) return kExitNotCovering;
    if (r.slack < -tol.eps_eq) {
        std::printf("classification     covering bound violated\n");
        return kExitViolation;
    }
    std::printf("classification     %s\n", to_string(equality_case_check(c, K, tol)));
    return kExitOk;
}

int run_optimize(const std::string& figure_path, const OptimizerConfig& cfg,
                 const std::string& out_path, const std::string& svg_path,
                 const Tolerances& tol) {
    const ConvexFigure K = load_figure(figure_path, tol.eps_geom);
    const OptimizationResult res = minimize_covering_curve(K, cfg, tol);

    std::printf("best length        %.12g\n", res.best_length);
    std::printf("lower bound        %.12g\n", res.lower_bound);
    std::printf("gap to bound       %.12g\n", res.best_length - res.lower_bound);
    std::printf("vertices           %zu\n", res.best_curve.vertex_count());
    double finite_best = res.per_restart_lengths.empty()
                             ? res.best_length
                             : res.per_restart_lengths.front();
    std::size_t finished = 0;
    for (double v : res.per_restart_lengths)
        if (std::isfinite(v)) {
            ++finished;
            finite_best = std::min(finite_best, v);
        }
    std::printf("restarts finished  %zu/%zu (best %.12g)\n", finished,
                res.per_restart_lengths.size(), finite_best);
    std::printf("classification     %s\n",
                to_string(equality_case_check(res.best_curve, K, tol)));
    print_optimality(res.report);

    if (!out_path.empty()) write_file(out_path, emit_curve(res.best_curve));
    if (!svg_path.empty())
        write_file(svg_path, render_scene(&K, &res.best_curve, tol));
    return kExitOk;
}

int run_fuzz(std::size_t count, std::uint64_t seed, const std::string& csv_path,
             const Tolerances& tol) {
    const FuzzOutcome out = run_fuzz_campaign(count, seed, tol);
    if (!csv_path.empty()) write_file(csv_path, fuzz_csv(out.rows));
    std::printf("cases run          %zu\n", out.rows.size());
    std::printf("violations         %zu\n", out.violations.size());
    for (std::size_t i = 0; i < out.violations.size() && i < 10; ++i)
        std::printf("  %s\n", out.violations[i].c_str());
    return out.violations.empty() ? kExitOk : kExitFuzzFailure;
}

int run_repro(const std::string& name, double t, std::size_t halfdisk_segments,
              const std::string& svg_path, const Tolerances& tol) {
    ReproReport rep = [&] {
        if (name == "triangle") return repro_triangle(tol);
        if (name == "parallelogram") return repro_parallelogram(t, tol);
        if (name == "halfdisk") return repro_halfdisk(halfdisk_segments, tol);
        if (name == "square") return repro_square(tol);
        throw FileError("unknown repro case \"" + name + "\"");
    }();

    for (const ReproCheck& c : rep.checks)
        std::printf("[%s] %s%s%s\n", c.passed ? "PASS" : "FAIL", c.label.c_str(),
                    c.detail.empty() ? "" : ": ", c.detail.c_str());

    const std::string svg = svg_path.empty() ? "repro_" + rep.name + ".svg" : svg_path;
    SvgScene scene;
    scene.add_figure(rep.figure);
    const char* palette[] = {"#c23b22", "#2d7d46", "#7a4aa8", "#b8860b"};
    for (std::size_t i = 0; i < rep.curves.size(); ++i)
        scene.add_curve(rep.curves[i].second, palette[i % 4]);
    write_file(svg, scene.str());
    std::printf("figure written to %s\n", svg.c_str());

    return rep.all_passed() ? kExitOk : kExitViolation;
}

int run_render(const std::string& figure_path, const std::string& curve_path,
               const std::string& out_path, const Tolerances& tol) {
    const ConvexFigure K = load_figure(figure_path, tol.eps_geom);
    if (curve_path.empty()) {
        write_file(out_path, render_scene(&K, nullptr, tol));
    } else {
        const Curve c = load_curve(curve_path);
        write_file(out_path, render_scene(&K, &c, tol));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering-curve toolkit: verifies length >= perimeter - diameter "
                 "for curves whose convex hull covers a convex figure, classifies "
                 "equality cases, and searches for shortest covering curves."};
    app.require_subcommand(1);
    app.set_config("--config");

    Tolerances tol;
    app.add_option("--eps-geom", tol.eps_geom, "orientation/containment slack");
    app.add_option("--eps-contact", tol.eps_contact, "curve-touches-figure threshold");
    app.add_option("--eps-eq", tol.eps_eq, "equality-classification slack");

    std::string figure_path, curve_path, out_path, svg_path, csv_path, case_name;
    OptimizerConfig cfg;
    std::size_t fuzz_count = 1000;
    std::uint64_t fuzz_seed = 42;
    double repro_t = 2.0;
    std::size_t halfdisk_segments = 256;

    CLI::App* verify = app.add_subcommand("verify", "check a curve against a figure");
    verify->add_option("figure", figure_path, "figure JSON file")->required();
    verify->add_option("curve", curve_path, "curve JSON file")->required();

    CLI::App* optimize =
        app.add_subcommand("optimize", "search for a shortest covering curve");
    optimize->add_option("figure", figure_path, "figure JSON file")->required();
    optimize->add_option("--vertices", cfg.n_vertices, "curve vertex budget")
        ->required();
    optimize->add_option("--restarts", cfg.restarts, "number of restarts");
    optimize->add_option("--seed", cfg.seed, "random seed")->envname("HULLCOVER_SEED");
    optimize->add_option("--rounds", cfg.penalty_rounds, "penalty continuation rounds");
    optimize->add_option("--iters", cfg.max_iters_per_round, "descent iterations per round");
    optimize->add_option("--out", out_path, "write best curve JSON here");
    optimize->add_option("--svg", svg_path, "write an SVG of the result here");

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized property campaign");
    fuzz->add_option("--count", fuzz_count, "number of cases");
    fuzz->add_option("--seed", fuzz_seed, "campaign seed")->envname("HULLCOVER_SEED");
    fuzz->add_option("--csv", csv_path, "write per-case CSV here");

    CLI::App* repro = app.add_subcommand("repro", "run a worked example");
    repro->add_option("--case", case_name, "triangle|parallelogram|halfdisk|square")
        ->required();
    repro->add_option("--t", repro_t, "parallelogram slant (>= 1)");
    repro->add_option("--segments", halfdisk_segments, "half-disk segment count");
    repro->add_option("--svg", svg_path, "SVG output path");

    CLI::App* render = app.add_subcommand("render", "draw figure and curve as SVG");
    render->add_option("figure", figure_path, "figure JSON file")->required();
    render->add_option("curve", curve_path, "curve JSON file");
    render->add_option("--out", out_path, "SVG output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        tol.validate();
        if (verify->parsed()) return run_verify(figure_path, curve_path, tol);
        if (optimize->parsed()) return run_optimize(figure_path, cfg, out_path, svg_path, tol);
        if (fuzz->parsed()) return run_fuzz(fuzz_count, fuzz_seed, csv_path, tol);
        if (repro->parsed())
            return run_repro(case_name, repro_t, halfdisk_segments, svg_path, tol);
        if (render->parsed()) return run_render(figure_path, curve_path, out_path, tol);
    } catch (const FileError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const TheoremViolation& e) {
        std::fprintf(stderr, "internal invariant violated: %s\n", e.what());
        return kExitViolation;
    } catch (const NotCovering& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNotCovering;
    } catch (const OptimizationFailed& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitOptimizationFailed;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
    return kExitOk;
}
