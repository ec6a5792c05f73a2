#include "trishape/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

#include "trishape/error.hpp"
#include "trishape/sites_io.hpp"

namespace trishape {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

class Canvas {
public:
    Canvas(std::span<const Point2> pts, const SvgOptions& o) : margin_(o.margin) {
        double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
        double x1 = -x0, y1 = -x0;
        for (const Point2& p : pts) {
            x0 = std::min(x0, p.x);
            y0 = std::min(y0, p.y);
            x1 = std::max(x1, p.x);
            y1 = std::max(y1, p.y);
        }
        origin_ = {x0, y0};
        const double span = std::max({x1 - x0, y1 - y0, 1e-12});
        scale_ = (o.width - 2.0 * o.margin) / span;
        width_ = o.width;
        height_ = (y1 - y0) * scale_ + 2.0 * o.margin;
    }

    std::string xy(Point2 p) const {
        return num((p.x - origin_.x) * scale_ + margin_) + "," + num((p.y - origin_.y) * scale_ + margin_);
    }
    std::string x(Point2 p) const { return num((p.x - origin_.x) * scale_ + margin_); }
    std::string y(Point2 p) const { return num((p.y - origin_.y) * scale_ + margin_); }
    double width() const { return width_; }
    double height() const { return height_; }

private:
    Point2 origin_;
    double scale_ = 1.0, margin_ = 0.0, width_ = 0.0, height_ = 0.0;
};

bool is_quadratic_bezier(const NurbsCurve& c) {
    const auto& w = c.weights();
    return c.degree() == 2 && c.control_points().size() == 3 && w[0] == w[1] && w[1] == w[2];
}

// Curve for edge a->b, oriented from a.
struct DirectedCurve {
    const NurbsCurve* curve;
    bool reversed;
};

DirectedCurve directed(const CurvTriangulation& ct, int a, int b) {
    const std::optional<int> e = ct.base.find_edge(a, b);
    if (!e) fail(ErrorKind::InvalidArgument, "path step is not an edge of the triangulation");
    return {&ct.edge_curves[*e], ct.base.edges()[*e].u != a};
}

// Path commands continuing from the curve's start point to its end.
std::string curve_commands(const Canvas& cv, DirectedCurve dc, int samples) {
    if (is_quadratic_bezier(*dc.curve)) {
        const auto& cp = dc.curve->control_points();
        return " Q " + cv.xy(cp[1]) + " " + cv.xy(dc.reversed ? cp[0] : cp[2]);
    }
    std::vector<Point2> pts = sample_curve(*dc.curve, samples);
    if (dc.reversed) std::reverse(pts.begin(), pts.end());
    std::string s;
    for (std::size_t i = 1; i < pts.size(); ++i) s += " L " + cv.xy(pts[i]);
    return s;
}

}  // namespace

std::string level_color(int k) {
    static constexpr std::array<const char*, 6> palette = {"lightskyblue", "palegreen", "plum",
                                                           "peachpuff", "lightcoral", "khaki"};
    if (k == 1) return "yellow";
    if (k == 2) return "gray";
    if (k < 1) return "white";
    return palette[static_cast<std::size_t>(k - 3) % palette.size()];
}

std::string render_svg(const Triangulation& t, const SpokeDecomposition& dec, const CurvTriangulation* curv,
                       std::span<const int> geodesic, const SvgOptions& options) {
    if (t.face_count() == 0) fail(ErrorKind::DegenerateInput, "nothing to render");
    if (static_cast<int>(dec.level.size()) != t.face_count()) {
        fail(ErrorKind::InvalidArgument, "decomposition does not match the triangulation");
    }
    std::vector<Point2> extent = t.sites();
    if (curv) {
        for (const NurbsCurve& c : curv->edge_curves) {
            extent.insert(extent.end(), c.control_points().begin(), c.control_points().end());
        }
    }
    const Canvas cv(extent, options);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" +
           num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">\n";
    out += "<g class=\"faces\" stroke=\"none\">\n";
    for (int f = 0; f < t.face_count(); ++f) {
        const Triangle& tri = t.faces()[f];
        const std::string attrs = " class=\"face\" data-face=\"" + std::to_string(f) + "\" data-level=\"" +
                                  std::to_string(dec.level[f]) + "\" fill=\"" + level_color(dec.level[f]) + "\"";
        if (!curv) {
            out += "<polygon" + attrs + " points=\"" + cv.xy(t.sites()[tri.a]) + " " + cv.xy(t.sites()[tri.b]) +
                   " " + cv.xy(t.sites()[tri.c]) + "\"/>\n";
            continue;
        }
        std::string d = "M " + cv.xy(t.sites()[tri.a]);
        const std::array<int, 3> v = tri.vertices();
        for (int i = 0; i < 3; ++i) d += curve_commands(cv, directed(*curv, v[i], v[(i + 1) % 3]), options.curve_samples);
        out += "<path" + attrs + " d=\"" + d + " Z\"/>\n";
    }
    out += "</g>\n<g class=\"edges\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    for (int e = 0; e < t.edge_count(); ++e) {
        const Edge& edge = t.edges()[e];
        const std::string cls = t.is_boundary_edge(e) ? "edge boundary\" stroke-width=\"2" : "edge";
        const Point2 a = t.sites()[edge.u], b = t.sites()[edge.v];
        if (!curv) {
            out += "<line class=\"" + cls + "\" x1=\"" + cv.x(a) + "\" y1=\"" + cv.y(a) + "\" x2=\"" + cv.x(b) +
                   "\" y2=\"" + cv.y(b) + "\"/>\n";
        } else {
            out += "<path class=\"" + cls + "\" d=\"M " + cv.xy(a) +
                   curve_commands(cv, {&curv->edge_curves[e], false}, options.curve_samples) + "\"/>\n";
        }
    }
    out += "</g>\n";

    if (geodesic.size() >= 2) {
        std::string pts = cv.xy(t.sites()[geodesic.front()]);
        for (std::size_t i = 1; i < geodesic.size(); ++i) {
            const int a = geodesic[i - 1], b = geodesic[i];
            if (!curv) {
                if (!t.find_edge(a, b)) fail(ErrorKind::InvalidArgument, "path step is not an edge of the triangulation");
                pts += " " + cv.xy(t.sites()[b]);
                continue;
            }
            const DirectedCurve dc = directed(*curv, a, b);
            std::vector<Point2> s = sample_curve(*dc.curve, options.curve_samples);
            if (dc.reversed) std::reverse(s.begin(), s.end());
            for (std::size_t j = 1; j < s.size(); ++j) pts += " " + cv.xy(s[j]);
        }
        out += "<polyline class=\"geodesic\" fill=\"none\" stroke=\"red\" stroke-width=\"3\" points=\"" + pts +
               "\"/>\n";
    }

    out += "<g class=\"sites\" fill=\"black\">\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.vertex_faces(v).empty()) continue;
        const Point2 p = t.sites()[v];
        const bool nucleus = v == dec.nucleus.vertex;
        out += "<circle class=\"" + std::string(nucleus ? "nucleus" : "site") + "\" cx=\"" + cv.x(p) + "\" cy=\"" +
               cv.y(p) + "\" r=\"" + (nucleus ? "5" : "2.5") + "\"" + (nucleus ? " fill=\"blue\"" : "") + "/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

void render_svg(const Triangulation& t, const SpokeDecomposition& dec, const CurvTriangulation* curv,
                std::span<const int> geodesic, const std::filesystem::path& out, const SvgOptions& options) {
    save_text(out, render_svg(t, dec, curv, geodesic, options));
}

}  // namespace trishape
