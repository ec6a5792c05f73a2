#pragma once

#include <array>
#include <span>
#include <vector>

#include <json.hpp>

#include "trishape/complexes.hpp"
#include "trishape/geometry.hpp"

namespace trishape {

using Matrix3 = std::array<std::array<double, 3>, 3>;

inline constexpr Matrix3 kIdentity3 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

/// Cox-de Boor basis N_{i,degree}(t) with the 0/0 := 0 convention. At the last knot the
/// final non-empty span is treated as closed so clamped curves interpolate their end.
double bspline_basis(int i, int degree, double t, std::span<const double> knots);

/// All N_{i,degree}(t) for i = 0 .. knots.size() - degree - 2.
std::vector<double> basis_functions(int degree, double t, std::span<const double> knots);

/// Clamped uniform knot vector on [0, 1] for `count` control points.
std::vector<double> clamped_uniform_knots(int count, int degree);

/// Polynomial B-spline sum P_i N_{i,p}(t).
Point2 bspline_eval(std::span<const Point2> control, int degree, std::span<const double> knots, double t);

class NurbsCurve {
public:
    NurbsCurve(std::vector<Point2> control, std::vector<double> weights, int degree,
               std::vector<double> knots);

    static NurbsCurve clamped(std::vector<Point2> control, std::vector<double> weights, int degree);

    /// Rational evaluation; throws SingularWeight if the weighted basis vanishes at t.
    Point2 evaluate(double t) const;

    /// R_{i,p}(t) for every control point.
    std::vector<double> rational_basis(double t) const;

    const std::vector<Point2>& control_points() const { return control_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& knots() const { return knots_; }
    int degree() const { return degree_; }

    Point2 front() const { return control_.front(); }
    Point2 back() const { return control_.back(); }

private:
    std::vector<Point2> control_;
    std::vector<double> weights_;
    int degree_;
    std::vector<double> knots_;
};

/// Maps (x, y, 1) through h and dehomogenizes. Throws ProjectiveDegenerate at infinity.
Point2 project_point(const Matrix3& h, Point2 p);

/// Control points mapped through h; each weight is scaled by the homogeneous coordinate
/// of its mapped point so the curve maps pointwise.
NurbsCurve apply_projective(const NurbsCurve& curve, const Matrix3& h);

/// Curve values at `samples` uniform parameters on [0, 1], both ends included.
std::vector<Point2> sample_curve(const NurbsCurve& curve, int samples);

double curve_arc_length(const NurbsCurve& curve, int samples);

/// A triangulation whose edges are NURBS curves. edge_curves[e] runs from
/// edges()[e].u to edges()[e].v.
struct CurvTriangulation {
    Triangulation base;
    std::vector<NurbsCurve> edge_curves;
};

inline constexpr double kDefaultBend = 0.35;
inline constexpr double kDefaultMidWeight = 1.0;
inline constexpr int kDefaultEdgeSamples = 64;

/// Replaces every edge with a clamped quadratic NURBS whose middle control point is the
/// edge midpoint pulled by `bend` toward the centroid of the incident face with the
/// lower spoke level (lower face index on ties).
CurvTriangulation curvilinearize(const Triangulation& t, const SpokeDecomposition& dec,
                                 double bend = kDefaultBend, double mid_weight = kDefaultMidWeight);

/// Boundary polygon of a curvilinear face: edge samples concatenated counter-clockwise.
std::vector<Point2> curv_face_polygon(const CurvTriangulation& ct, int face, int samples);

double curv_triangle_area(const CurvTriangulation& ct, int face, int samples);

nlohmann::json to_json(const NurbsCurve& curve);
nlohmann::json to_json(const CurvTriangulation& ct);

}  // namespace trishape
