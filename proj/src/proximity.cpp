#include "trishape/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trishape/error.hpp"
#include "trishape/tolerances.hpp"

namespace trishape {

namespace {

std::array<Point2, 3> ccw(Point2 a, Point2 b, Point2 c) {
    if (orient2d(a, b, c) < 0) std::swap(b, c);
    return {a, b, c};
}

// Outward unit normal of the directed edge p -> q of a counter-clockwise polygon.
Point2 outward_normal(Point2 p, Point2 q) {
    const Point2 d = q - p;
    const double len = norm(d);
    return {d.y / len, -d.x / len};
}

bool open_polygons_overlap(std::span<const Point2> p, std::span<const Point2> q) {
    const auto separated_along = [&](std::span<const Point2> poly) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point2 n = outward_normal(poly[i], poly[(i + 1) % poly.size()]);
            double p_lo = std::numeric_limits<double>::infinity(), p_hi = -p_lo;
            double q_lo = p_lo, q_hi = -p_lo;
            for (const Point2& v : p) {
                p_lo = std::min(p_lo, dot(n, v));
                p_hi = std::max(p_hi, dot(n, v));
            }
            for (const Point2& v : q) {
                q_lo = std::min(q_lo, dot(n, v));
                q_hi = std::max(q_hi, dot(n, v));
            }
            if (!(std::max(p_lo, q_lo) < std::min(p_hi, q_hi))) return true;
        }
        return false;
    };
    return !separated_along(p) && !separated_along(q);
}

}  // namespace

bool open_triangle_contains(const OpenTriangle& ot, Point2 q, std::span<const Point2> sites) {
    const auto v = ccw(sites[ot.base.a], sites[ot.base.b], sites[ot.base.c]);
    for (int i = 0; i < 3; ++i) {
        const Point2 n = outward_normal(v[i], v[(i + 1) % 3]);
        if (!(dot(n, q) < dot(n, v[i]) + ot.sigma)) return false;
    }
    return true;
}

std::array<Point2, 3> expanded_triangle(Point2 a, Point2 b, Point2 c, double sigma) {
    const auto v = ccw(a, b, c);
    if (sigma == 0.0) return v;
    const double la = distance(v[1], v[2]);
    const double lb = distance(v[2], v[0]);
    const double lc = distance(v[0], v[1]);
    const double perimeter = la + lb + lc;
    const Point2 incenter = (1.0 / perimeter) * (la * v[0] + lb * v[1] + lc * v[2]);
    const double inradius = 2.0 * triangle_area(v[0], v[1], v[2]) / perimeter;
    const double scale = (inradius + sigma) / inradius;
    return {incenter + scale * (v[0] - incenter), incenter + scale * (v[1] - incenter),
            incenter + scale * (v[2] - incenter)};
}

double default_sigma(const Triangulation& t) {
    return tol::kSigmaFraction * bounding_box_diagonal(t.sites());
}

bool near(const Triangulation& t, std::span<const int> a, std::span<const int> b) {
    for (int f : a) {
        for (int g : b) {
            if (faces_intersect(t, f, g)) return true;
        }
    }
    return false;
}

bool strongly_near(const Triangulation& t, std::span<const int> a, std::span<const int> b, double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) fail(ErrorKind::InvalidArgument, "sigma must be >= 0");
    const auto& s = t.sites();
    for (int f : a) {
        const Triangle& tf = t.faces()[f];
        const auto pf = expanded_triangle(s[tf.a], s[tf.b], s[tf.c], sigma);
        for (int g : b) {
            const Triangle& tg = t.faces()[g];
            const auto pg = expanded_triangle(s[tg.a], s[tg.b], s[tg.c], sigma);
            if (open_polygons_overlap(pf, pg)) return true;
        }
    }
    return false;
}

bool curv_open_triangle_contains(const CurvTriangulation& ct, int face, Point2 q, double sigma, int samples) {
    const std::vector<Point2> poly = curv_face_polygon(ct, face, samples);
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point2 &pi = poly[i], &pj = poly[j];
        if ((pi.y > q.y) != (pj.y > q.y) && q.x < (pj.x - pi.x) * (q.y - pi.y) / (pj.y - pi.y) + pi.x) {
            inside = !inside;
        }
    }
    if (inside) return true;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (point_segment_distance(q, poly[i], poly[(i + 1) % poly.size()]) < sigma) return true;
    }
    return false;
}

TriangleDescriptor triangle_descriptor(const GrayImage& image, const Triangle& t, std::span<const Point2> sites) {
    TriangleDescriptor d;
    const std::array<int, 3> v = t.vertices();
    for (int i = 0; i < 3; ++i) {
        const Point2 p = sites[v[i]];
        const long x = std::lround(p.x);
        const long y = std::lround(p.y);
        if (!image.contains(static_cast<int>(x), static_cast<int>(y))) {
            fail(ErrorKind::OutOfBounds, "vertex " + std::to_string(v[i]) + " lies outside the image");
        }
        const int xi = static_cast<int>(x), yi = static_cast<int>(y);
        const int x0 = std::max(xi - 1, 0), x1 = std::min(xi + 1, image.width - 1);
        const int y0 = std::max(yi - 1, 0), y1 = std::min(yi + 1, image.height - 1);
        const double gx = x1 > x0 ? (double(image.at(x1, yi)) - image.at(x0, yi)) / (x1 - x0) : 0.0;
        const double gy = y1 > y0 ? (double(image.at(xi, y1)) - image.at(xi, y0)) / (y1 - y0) : 0.0;
        const double r = std::hypot(gx, gy);
        d.grad[i] = std::polar(r, r > 0.0 ? std::atan2(gy, gx) : 0.0);
    }
    d.edge_lengths = {distance(sites[t.a], sites[t.b]), distance(sites[t.b], sites[t.c]),
                      distance(sites[t.c], sites[t.a])};
    d.area = triangle_area(t, sites);
    return d;
}

bool descriptively_near(const TriangleDescriptor& d1, const TriangleDescriptor& d2, const DescriptorTolerance& tol) {
    if (std::abs(d1.area - d2.area) > tol.area) return false;
    auto e1 = d1.edge_lengths, e2 = d2.edge_lengths;
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    std::array<double, 3> g1{}, g2{};
    for (int i = 0; i < 3; ++i) {
        g1[i] = std::abs(d1.grad[i]);
        g2[i] = std::abs(d2.grad[i]);
    }
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    for (int i = 0; i < 3; ++i) {
        if (std::abs(e1[i] - e2[i]) > tol.edge) return false;
        if (std::abs(g1[i] - g2[i]) > tol.grad) return false;
    }
    return true;
}

}  // namespace trishape
