#include "hullcover/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hullcover/rng.hpp"

namespace hullcover {

namespace {

constexpr double kPi = 3.14159265358979323846;

double mod_positive(double x, double period) {
    double m = std::fmod(x, period);
    if (m < 0.0) m += period;
    return m;
}

Point vertex_centroid(const std::vector<Point>& v) {
    double sx = 0.0, sy = 0.0;
    for (const Point& p : v) {
        sx += p.x;
        sy += p.y;
    }
    return {sx / static_cast<double>(v.size()), sy / static_cast<double>(v.size())};
}

}  // namespace

const char* to_string(EqualityCase e) {
    switch (e) {
        case EqualityCase::strict: return "strict";
        case EqualityCase::equality_valid: return "equality_valid";
        case EqualityCase::equality_violates_characterization:
            return "equality_violates_characterization";
    }
    return "?";
}

const char* to_string(CurveStyle s) {
    switch (s) {
        case CurveStyle::boundary_perturb: return "boundary_perturb";
        case CurveStyle::vertex_tour: return "vertex_tour";
        case CurveStyle::arc_plus_noise: return "arc_plus_noise";
    }
    return "?";
}

CoverageReport main_inequality_check(const Curve& c, const ConvexFigure& K,
                                     const Tolerances& tol) {
    CoverageReport r = covers(c, K, tol);
    if (!r.covered)
        throw NotCovering("main_inequality_check: hull of curve does not cover figure");
    if (r.slack < -tol.eps_eq)
        throw TheoremViolation("covering bound violated: slack " +
                               std::to_string(r.slack));
    return r;
}

bool is_convex_boundary_traversal(const Curve& c, const ConvexFigure& hull,
                                  const Tolerances& tol, double dist_tol) {
    const double per = perimeter(hull);
    if (per == 0.0) return true;  // repeated single point
    if (dist_tol < 0.0) dist_tol = tol.eps_contact;

    for (const Point& v : c.vertices())
        if (std::abs(signed_distance(hull, v)) > dist_tol) return false;
    const auto& v = c.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Point mid{0.5 * (v[i].x + v[i + 1].x), 0.5 * (v[i].y + v[i + 1].y)};
        if (std::abs(signed_distance(hull, mid)) > dist_tol) return false;
    }

    // Boundary coordinates must advance monotonically in one direction; a
    // backward step inflates the opposite sum by roughly a full perimeter.
    std::vector<double> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        s[i] = project_to_boundary(hull, v[i]).arc_coord;

    const double L = c.length();
    const double snap = 1e-9 + 1e-6 * (per + L);
    double fwd = 0.0, bwd = 0.0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        double f = mod_positive(s[i + 1] - s[i], per);
        double b = mod_positive(s[i] - s[i + 1], per);
        if (f > per - snap) f = 0.0;
        if (b > per - snap) b = 0.0;
        fwd += f;
        bwd += b;
    }
    if (L > per + snap) return false;
    return std::abs(fwd - L) <= snap || std::abs(bwd - L) <= snap;
}

double figure_discrepancy(const ConvexFigure& A, const ConvexFigure& B) {
    double worst = 0.0;
    for (const Point& p : A.vertices())
        worst = std::max(worst, std::abs(signed_distance(B, p)));
    for (const Point& p : B.vertices())
        worst = std::max(worst, std::abs(signed_distance(A, p)));
    return worst;
}

EqualityCase equality_case_check(const Curve& c, const ConvexFigure& K,
                                 const Tolerances& tol) {
    const CoverageReport r = main_inequality_check(c, K, tol);
    if (r.slack > tol.eps_eq) return EqualityCase::strict;

    // A vertex hovering delta off the boundary inflates the slack only
    // quadratically (about 2*delta^2 / edge length), so a slack within
    // eps_eq pins the geometry only to the matching square-root band.
    const double geo_tol =
        tol.eps_contact +
        std::sqrt(std::max(r.slack, 0.0) * (1.0 + r.figure_perimeter) / 2.0);

    const ConvexFigure hull = hull_of_curve(c, tol);
    const bool convex_arc = is_convex_boundary_traversal(c, hull, tol, geo_tol);
    const bool hull_is_figure = figure_discrepancy(hull, K) <= tol.eps_eq + geo_tol;
    const bool chord_is_diameter =
        std::abs(distance(c.front(), c.back()) - r.figure_diameter) <=
        tol.eps_eq + geo_tol;

    return (convex_arc && hull_is_figure && chord_is_diameter)
               ? EqualityCase::equality_valid
               : EqualityCase::equality_violates_characterization;
}

double closed_curve_check(const Curve& c, const Tolerances& tol) {
    if (!c.closed()) throw InvalidInput("closed_curve_check: curve is not closed");
    const double slack = c.length() - perimeter(hull_of_curve(c, tol));
    if (slack < -1e-12)
        throw TheoremViolation("closed curve shorter than its hull perimeter: " +
                               std::to_string(slack));
    return slack;
}

double monotonicity_check(const ConvexFigure& K1, const ConvexFigure& K2,
                          const Tolerances& tol) {
    for (const Point& v : K1.vertices())
        if (signed_distance(K2, v) > tol.eps_geom)
            throw NotNested("monotonicity_check: first figure is not inside second");
    const double diff = perimeter(K2) - perimeter(K1);
    if (diff < -1e-12)
        throw TheoremViolation("nested perimeter monotonicity violated: " +
                               std::to_string(diff));
    if (std::abs(diff) <= 1e-12 && figure_discrepancy(K1, K2) > tol.eps_geom)
        throw TheoremViolation("equal perimeters on distinct nested figures");
    return diff;
}

double add_point_inequality_check(const ConvexFigure& K, const Point& A,
                                  const Tolerances& tol) {
    const TangentInfo t = tangents_from_point(K, A, tol);
    if (std::abs(t.angle - kPi / 2.0) > tol.eps_eq)
        throw AngleNotRight("add_point_inequality_check: tangent wedge angle " +
                            std::to_string(t.angle) + " is not pi/2");
    const double leg = std::min(distance(A, t.a1), distance(A, t.a2));
    const double slack = leg + perimeter(K) - perimeter(add_point_hull(K, A, tol));
    if (slack <= 0.0)
        throw TheoremViolation("add-point inequality failed with slack " +
                               std::to_string(slack));
    return slack;
}

// ---------------------------------------------------------------------------
// Generators

ConvexFigure random_convex_polygon(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("random_convex_polygon: need n >= 3");
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        std::vector<Point> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.in_unit_disk());
        ConvexFigure K = convex_hull(pts);
        if (K.kind() == FigureKind::polygon) return K;
    }
}

Curve random_closed_polyline(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("random_closed_polyline: need n >= 2");
    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.in_unit_disk());
    pts.push_back(pts.front());
    return Curve(std::move(pts));
}

namespace {

Curve vertex_tour(const ConvexFigure& K, Rng& rng) {
    std::vector<Point> pts = K.vertices();
    if (pts.size() == 1) return Curve({pts[0], pts[0]});
    for (std::size_t i = pts.size() - 1; i > 0; --i)
        std::swap(pts[i], pts[rng.index(i + 1)]);
    return Curve(std::move(pts));
}

// Outward radial push from an interior point keeps the original points
// inside the hull of the pushed ones, so coverage survives.
Point push_outward(const Point& p, const Point& origin, double factor) {
    return {origin.x + factor * (p.x - origin.x), origin.y + factor * (p.y - origin.y)};
}

Curve boundary_perturb(const ConvexFigure& K, Rng& rng) {
    const auto& v = K.vertices();
    const Point O = vertex_centroid(v);
    std::vector<Point> pts;
    pts.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        pts.push_back(push_outward(a, O, 1.0 + 0.2 * rng.uniform()));
        pts.push_back(push_outward({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}, O,
                                   1.0 + 0.2 * rng.uniform()));
    }
    return Curve(std::move(pts));
}

Curve arc_plus_noise(const ConvexFigure& K, Rng& rng, const Tolerances& tol) {
    const auto& v = K.vertices();
    const std::size_t n = v.size();
    const Point O = vertex_centroid(v);

    std::vector<Point> base;
    for (int attempt = 0; attempt < 20 && base.empty(); ++attempt) {
        const std::size_t i = rng.index(n);
        std::size_t j = rng.index(n);
        const ArcSide side = rng.uniform() < 0.5 ? ArcSide::left : ArcSide::right;
        if (i == j) continue;
        Curve arc = boundary_arc(K, i, j, side);
        if (covers(arc, K, tol).covered) base = arc.vertices();
    }
    if (base.empty()) {
        // full boundary tour from a random start always covers
        const std::size_t start = rng.index(n);
        for (std::size_t k = 0; k < n; ++k) base.push_back(v[(start + k) % n]);
        base.push_back(v[start]);
    }
    for (std::size_t k = 1; k + 1 < base.size(); ++k)
        base[k] = push_outward(base[k], O, 1.0 + 0.05 * rng.uniform());
    return Curve(std::move(base));
}

}  // namespace

Curve random_covering_curve(const ConvexFigure& K, std::uint64_t seed, CurveStyle style) {
    Rng rng(mix_seed(seed, 1000 + static_cast<std::uint64_t>(style)));
    Tolerances tol;

    Curve c = [&] {
        if (K.kind() != FigureKind::polygon) return vertex_tour(K, rng);
        switch (style) {
            case CurveStyle::vertex_tour: return vertex_tour(K, rng);
            case CurveStyle::boundary_perturb: return boundary_perturb(K, rng);
            case CurveStyle::arc_plus_noise: return arc_plus_noise(K, rng, tol);
        }
        return vertex_tour(K, rng);
    }();

    if (!covers(c, K, tol).covered)
        throw TheoremViolation("random_covering_curve produced a non-covering curve");
    return c;
}

// ---------------------------------------------------------------------------
// Fuzz campaign

void run_fuzz_case(std::uint64_t case_seed, CurveStyle style, const Tolerances& tol,
                   FuzzOutcome& out) {
    auto flag = [&](const std::string& what) {
        out.violations.push_back(what + " (seed " + std::to_string(case_seed) +
                                 ", style " + to_string(style) + ")");
    };

    Rng meta(mix_seed(case_seed, 0));
    const std::size_t n = 3 + meta.index(38);
    const ConvexFigure K = random_convex_polygon(n, case_seed);
    const Curve c = random_covering_curve(K, case_seed, style);

    const CoverageReport r = covers(c, K, tol);
    if (!r.covered) flag("generated curve fails coverage");
    if (r.slack < -1e-9) flag("covering bound slack " + std::to_string(r.slack));
    if (r.curve_length < 0.5 * r.figure_perimeter - 1e-9)
        flag("half-perimeter bound violated");
    if (r.figure_perimeter < 2.0 * r.figure_diameter - 1e-12)
        flag("perimeter below twice diameter");
    if (r.covered &&
        equality_case_check(c, K, tol) ==
            EqualityCase::equality_violates_characterization)
        flag("zero slack without the equality characterization");

    try {
        const Curve loop = random_closed_polyline(20, mix_seed(case_seed, 7));
        const double closed_slack = closed_curve_check(loop, tol);
        if (closed_slack < -1e-12)
            flag("closed-curve slack " + std::to_string(closed_slack));
        if (closed_slack <= 1e-12 &&
            !is_convex_boundary_traversal(loop, hull_of_curve(loop, tol), tol))
            flag("zero closed-curve slack on a non-convex traversal");
    } catch (const TheoremViolation& e) {
        flag(e.what());
    }

    try {
        const std::size_t take = 1 + meta.index(K.vertex_count());
        std::vector<std::size_t> idx(K.vertex_count());
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = idx.size() - 1; i > 0; --i)
            std::swap(idx[i], idx[meta.index(i + 1)]);
        std::vector<Point> subset;
        for (std::size_t i = 0; i < take; ++i) subset.push_back(K.vertices()[idx[i]]);
        const double diff =
            monotonicity_check(convex_hull(subset, tol.eps_geom), K, tol);
        if (diff < -1e-12) flag("monotonicity difference " + std::to_string(diff));
    } catch (const TheoremViolation& e) {
        flag(e.what());
    }

    out.rows.push_back({case_seed, style, K.vertex_count(), r.curve_length,
                        r.figure_perimeter, r.figure_diameter, r.slack, r.covered});
}

FuzzOutcome run_fuzz_campaign(std::size_t count, std::uint64_t seed,
                              const Tolerances& tol) {
    FuzzOutcome out;
    out.rows.reserve(count);
    static constexpr CurveStyle styles[] = {
        CurveStyle::boundary_perturb, CurveStyle::vertex_tour, CurveStyle::arc_plus_noise};
    for (std::size_t k = 0; k < count; ++k)
        run_fuzz_case(mix_seed(seed, k), styles[k % 3], tol, out);
    return out;
}

}  // namespace hullcover
