#pragma once

#include <array>
#include <complex>
#include <span>

#include "trishape/geometry.hpp"
#include "trishape/image.hpp"
#include "trishape/splines.hpp"

namespace trishape {

/// A filled triangle whose three half-planes are relaxed by sigma (a distance) and made
/// strict, so neighbouring open triangles overlap.
struct OpenTriangle {
    Triangle base;
    double sigma = 0.0;
};

bool open_triangle_contains(const OpenTriangle& ot, Point2 q, std::span<const Point2> sites);

/// Vertices of the closed triangle bounded by the three edge lines pushed outward by sigma.
std::array<Point2, 3> expanded_triangle(Point2 a, Point2 b, Point2 c, double sigma);

/// 1e-6 of the bounding-box diagonal of the sites.
double default_sigma(const Triangulation& t);

/// Lodato nearness: the closures of some face in `a` and some face in `b` meet.
bool near(const Triangulation& t, std::span<const int> a, std::span<const int> b);

/// Strong nearness: some pair of sigma-expanded open faces overlaps. With sigma = 0 the
/// plain open interiors are compared, so faces that only touch are not strongly near.
bool strongly_near(const Triangulation& t, std::span<const int> a, std::span<const int> b, double sigma);

/// Sampling-based membership for a curvilinear open face: inside the polygonal
/// approximation of the face or within sigma of its boundary.
bool curv_open_triangle_contains(const CurvTriangulation& ct, int face, Point2 q, double sigma,
                                 int samples = kDefaultEdgeSamples);

struct TriangleDescriptor {
    std::array<std::complex<double>, 3> grad;  // r * e^{i theta} at each vertex
    std::array<double, 3> edge_lengths;        // |ab|, |bc|, |ca|
    double area = 0.0;
};

/// Central-difference image gradient at each vertex pixel (one-sided at the border),
/// edge lengths and area.
TriangleDescriptor triangle_descriptor(const GrayImage& image, const Triangle& t, std::span<const Point2> sites);

struct DescriptorTolerance {
    double area = 0.0;
    double edge = 0.0;
    double grad = 0.0;
};

/// Compares area, sorted edge lengths and sorted gradient magnitudes feature-wise.
bool descriptively_near(const TriangleDescriptor& d1, const TriangleDescriptor& d2, const DescriptorTolerance& tol);

}  // namespace trishape
