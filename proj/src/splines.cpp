#include "trishape/splines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trishape/error.hpp"
#include "trishape/tolerances.hpp"

namespace trishape {

namespace {

void check_domain(double t, std::span<const double> knots) {
    if (!(t >= knots.front() && t <= knots.back())) {
        fail(ErrorKind::OutOfDomain, "parameter " + std::to_string(t) + " outside knot range [" +
                                         std::to_string(knots.front()) + ", " +
                                         std::to_string(knots.back()) + "]");
    }
}

double span_indicator(int i, double t, std::span<const double> knots) {
    const double lo = knots[i];
    const double hi = knots[i + 1];
    if (!(lo < hi)) return 0.0;
    if (t == knots.back()) return hi == knots.back() ? 1.0 : 0.0;
    return (lo <= t && t < hi) ? 1.0 : 0.0;
}

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

double bspline_basis(int i, int degree, double t, std::span<const double> knots) {
    if (degree < 0 || i < 0 || i + degree + 1 >= static_cast<int>(knots.size())) {
        fail(ErrorKind::InvalidArgument, "bspline_basis: index/degree outside knot vector");
    }
    check_domain(t, knots);
    if (degree == 0) return span_indicator(i, t, knots);
    const double left = safe_ratio(t - knots[i], knots[i + degree] - knots[i]);
    const double right = safe_ratio(knots[i + degree + 1] - t, knots[i + degree + 1] - knots[i + 1]);
    double value = 0.0;
    if (left != 0.0) value += left * bspline_basis(i, degree - 1, t, knots);
    if (right != 0.0) value += right * bspline_basis(i + 1, degree - 1, t, knots);
    return value;
}

std::vector<double> basis_functions(int degree, double t, std::span<const double> knots) {
    const int spans = static_cast<int>(knots.size()) - 1;
    if (degree < 0 || spans - degree < 1) {
        fail(ErrorKind::InvalidArgument, "basis_functions: knot vector too short for degree");
    }
    check_domain(t, knots);
    std::vector<double> n(spans);
    for (int i = 0; i < spans; ++i) n[i] = span_indicator(i, t, knots);
    for (int j = 1; j <= degree; ++j) {
        for (int i = 0; i < spans - j; ++i) {
            const double left = safe_ratio(t - knots[i], knots[i + j] - knots[i]);
            const double right = safe_ratio(knots[i + j + 1] - t, knots[i + j + 1] - knots[i + 1]);
            n[i] = left * n[i] + right * n[i + 1];
        }
    }
    n.resize(spans - degree);
    return n;
}

std::vector<double> clamped_uniform_knots(int count, int degree) {
    if (degree < 1 || count < degree + 1) {
        fail(ErrorKind::InvalidArgument, "clamped knots need at least degree + 1 control points");
    }
    std::vector<double> knots(degree + 1, 0.0);
    const int interior = count - degree - 1;
    for (int j = 1; j <= interior; ++j) knots.push_back(static_cast<double>(j) / (interior + 1));
    knots.insert(knots.end(), degree + 1, 1.0);
    return knots;
}

Point2 bspline_eval(std::span<const Point2> control, int degree, std::span<const double> knots, double t) {
    if (knots.size() != control.size() + degree + 1) {
        fail(ErrorKind::InvalidArgument, "bspline_eval: knot count must be control count + degree + 1");
    }
    const std::vector<double> n = basis_functions(degree, t, knots);
    Point2 out;
    for (std::size_t i = 0; i < control.size(); ++i) out = out + n[i] * control[i];
    return out;
}

NurbsCurve::NurbsCurve(std::vector<Point2> control, std::vector<double> weights, int degree,
                       std::vector<double> knots)
    : control_(std::move(control)), weights_(std::move(weights)), degree_(degree), knots_(std::move(knots)) {
    if (degree_ < 1) fail(ErrorKind::InvalidArgument, "NURBS degree must be >= 1");
    if (control_.size() < static_cast<std::size_t>(degree_) + 1) {
        fail(ErrorKind::InvalidArgument, "NURBS needs at least degree + 1 control points");
    }
    if (weights_.size() != control_.size()) {
        fail(ErrorKind::InvalidArgument, "NURBS weight count differs from control point count");
    }
    if (knots_.size() != control_.size() + degree_ + 1) {
        fail(ErrorKind::InvalidArgument, "NURBS knot count must be control count + degree + 1");
    }
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) fail(ErrorKind::InvalidArgument, "NURBS weights must be finite and >= 0");
    }
    for (const Point2& p : control_) {
        if (!is_finite(p)) fail(ErrorKind::InvalidArgument, "NURBS control point is not finite");
    }
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i]) || knots_[i] < 0.0 || knots_[i] > 1.0) {
            fail(ErrorKind::InvalidArgument, "knots must lie in [0, 1]");
        }
        if (i > 0 && knots_[i] < knots_[i - 1]) fail(ErrorKind::InvalidArgument, "knots must be non-decreasing");
    }
}

NurbsCurve NurbsCurve::clamped(std::vector<Point2> control, std::vector<double> weights, int degree) {
    std::vector<double> knots = clamped_uniform_knots(static_cast<int>(control.size()), degree);
    return NurbsCurve(std::move(control), std::move(weights), degree, std::move(knots));
}

std::vector<double> NurbsCurve::rational_basis(double t) const {
    std::vector<double> r = basis_functions(degree_, t, knots_);
    double denom = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] *= weights_[i];
        denom += r[i];
    }
    if (!(denom > tol::kWeightEps)) {
        fail(ErrorKind::SingularWeight, "weighted basis vanishes at t = " + std::to_string(t));
    }
    for (double& v : r) v /= denom;
    return r;
}

Point2 NurbsCurve::evaluate(double t) const {
    const std::vector<double> r = rational_basis(t);
    Point2 out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0.0) out = out + r[i] * control_[i];
    }
    return out;
}

Point2 project_point(const Matrix3& h, Point2 p) {
    const double x = h[0][0] * p.x + h[0][1] * p.y + h[0][2];
    const double y = h[1][0] * p.x + h[1][1] * p.y + h[1][2];
    const double w = h[2][0] * p.x + h[2][1] * p.y + h[2][2];
    if (w == 0.0 || !std::isfinite(x / w) || !std::isfinite(y / w)) {
        fail(ErrorKind::ProjectiveDegenerate, "point maps to infinity");
    }
    return {x / w, y / w};
}

NurbsCurve apply_projective(const NurbsCurve& curve, const Matrix3& h) {
    const double det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                       h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                       h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    if (det == 0.0 || !std::isfinite(det)) fail(ErrorKind::InvalidArgument, "projective map is singular");

    const auto& ctrl = curve.control_points();
    std::vector<double> scale(ctrl.size());
    bool any_positive = false, any_negative = false;
    for (std::size_t i = 0; i < ctrl.size(); ++i) {
        scale[i] = h[2][0] * ctrl[i].x + h[2][1] * ctrl[i].y + h[2][2];
        if (scale[i] == 0.0) fail(ErrorKind::ProjectiveDegenerate, "control point maps to infinity");
        (scale[i] > 0 ? any_positive : any_negative) = true;
    }
    // h and -h are the same projective map, so a uniformly negative scale is harmless.
    // Mixed signs would require negative weights: the curve crosses the line at infinity.
    if (any_positive && any_negative) {
        fail(ErrorKind::ProjectiveDegenerate, "control polygon straddles the line mapped to infinity");
    }
    std::vector<Point2> mapped;
    std::vector<double> weights;
    mapped.reserve(ctrl.size());
    weights.reserve(ctrl.size());
    for (std::size_t i = 0; i < ctrl.size(); ++i) {
        mapped.push_back(project_point(h, ctrl[i]));
        weights.push_back(curve.weights()[i] * std::abs(scale[i]));
    }
    return NurbsCurve(std::move(mapped), std::move(weights), curve.degree(), curve.knots());
}

std::vector<Point2> sample_curve(const NurbsCurve& curve, int samples) {
    if (samples < 2) fail(ErrorKind::InvalidArgument, "need at least 2 samples per curve");
    std::vector<Point2> out;
    out.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        const double t = j == samples - 1 ? 1.0 : static_cast<double>(j) / (samples - 1);
        out.push_back(curve.evaluate(t));
    }
    return out;
}

double curve_arc_length(const NurbsCurve& curve, int samples) {
    const std::vector<Point2> pts = sample_curve(curve, samples);
    double length = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) length += distance(pts[i - 1], pts[i]);
    return length;
}

CurvTriangulation curvilinearize(const Triangulation& t, const SpokeDecomposition& dec, double bend,
                                 double mid_weight) {
    if (!(bend >= 0.0 && bend < 1.0)) fail(ErrorKind::InvalidArgument, "bend must lie in [0, 1)");
    if (!(mid_weight > 0.0) || !std::isfinite(mid_weight)) {
        fail(ErrorKind::InvalidArgument, "mid_weight must be positive and finite");
    }
    if (dec.level.size() != static_cast<std::size_t>(t.face_count())) {
        fail(ErrorKind::InvalidArgument, "decomposition does not belong to this triangulation");
    }
    CurvTriangulation ct{t, {}};
    ct.edge_curves.reserve(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e) {
        const auto owners = t.edge_faces(e);
        int pull = owners[0];
        if (owners.size() == 2) {
            const int other = owners[1];
            if (dec.level[other] < dec.level[pull] || (dec.level[other] == dec.level[pull] && other < pull)) {
                pull = other;
            }
        }
        const Point2 a = t.sites()[t.edges()[e].u];
        const Point2 b = t.sites()[t.edges()[e].v];
        const Point2 mid = 0.5 * (a + b);
        const Point2 apex = mid + bend * (t.centroid(pull) - mid);
        ct.edge_curves.push_back(NurbsCurve::clamped({a, apex, b}, {1.0, mid_weight, 1.0}, 2));
    }
    return ct;
}

std::vector<Point2> curv_face_polygon(const CurvTriangulation& ct, int face, int samples) {
    const Triangle& tri = ct.base.faces()[face];
    const std::array<int, 3> v = tri.vertices();
    std::vector<Point2> polygon;
    polygon.reserve(3 * (samples - 1));
    for (int i = 0; i < 3; ++i) {
        const int from = v[i];
        const int e = ct.base.face_edges(face)[i];
        std::vector<Point2> pts = sample_curve(ct.edge_curves[e], samples);
        if (ct.base.edges()[e].u != from) std::reverse(pts.begin(), pts.end());
        polygon.insert(polygon.end(), pts.begin(), pts.end() - 1);
    }
    return polygon;
}

double curv_triangle_area(const CurvTriangulation& ct, int face, int samples) {
    return std::abs(polygon_signed_area(curv_face_polygon(ct, face, samples)));
}

nlohmann::json to_json(const NurbsCurve& curve) {
    nlohmann::json ctrl = nlohmann::json::array();
    for (const Point2& p : curve.control_points()) ctrl.push_back({p.x, p.y});
    return {{"degree", curve.degree()},
            {"control_points", ctrl},
            {"weights", curve.weights()},
            {"knots", curve.knots()}};
}

nlohmann::json to_json(const CurvTriangulation& ct) {
    nlohmann::json edges = nlohmann::json::array();
    for (int e = 0; e < ct.base.edge_count(); ++e) {
        nlohmann::json entry = to_json(ct.edge_curves[e]);
        entry["edge"] = {ct.base.edges()[e].u, ct.base.edges()[e].v};
        edges.push_back(std::move(entry));
    }
    return {{"edges", edges}};
}

}  // namespace trishape
