#include "trishape/shape_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "trishape/error.hpp"

namespace trishape {

VertexPartition boundary_vertex_partition(std::span<const Point2> vertices) {
    if (vertices.empty()) fail(ErrorKind::DegenerateInput, "no boundary vertices to partition");
    VertexPartition part;
    Point2 sum;
    for (const Point2& p : vertices) sum = sum + p;
    part.centroid = (1.0 / static_cast<double>(vertices.size())) * sum;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        const Point2& p = vertices[i];
        (p.y > part.centroid.y ? part.above : part.below).push_back(i);
        (p.x > part.centroid.x ? part.right : part.left).push_back(i);
    }
    return part;
}

std::vector<int> boundary_vertices(const Triangulation& t) {
    std::set<int> ids;
    for (int e = 0; e < t.edge_count(); ++e) {
        if (!t.is_boundary_edge(e)) continue;
        ids.insert(t.edges()[e].u);
        ids.insert(t.edges()[e].v);
    }
    return {ids.begin(), ids.end()};
}

namespace {

TriangulationFeatures features_from_graph(const Triangulation& t, const WeightedGraph& g, double area) {
    TriangulationFeatures out;
    const DistanceMatrix d = distance_matrix(g);
    out.diameter = graph_diameter(d);
    out.diameter_path = geodesic_path(dijkstra(g, out.diameter.u), out.diameter.v);
    out.features.gdia = out.diameter.value;
    out.features.area = area;

    const std::vector<int> bv = boundary_vertices(t);
    std::vector<Point2> pts;
    pts.reserve(bv.size());
    for (int v : bv) pts.push_back(t.sites()[v]);
    const VertexPartition part = boundary_vertex_partition(pts);

    std::set<std::pair<int, int>> pairs;
    const auto add_pairs = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        for (int i : xs) {
            for (int j : ys) pairs.insert(std::minmax(bv[i], bv[j]));
        }
    };
    add_pairs(part.right, part.left);
    add_pairs(part.above, part.below);
    if (pairs.empty()) fail(ErrorKind::DegenerateInput, "boundary vertices yield no diameter pairs");

    double sum = 0.0, best = 0.0;
    for (const auto& [u, v] : pairs) {
        sum += d(u, v);
        best = std::max(best, d(u, v));
    }
    out.features.dia_max = best;
    out.features.dia_mean = sum / static_cast<double>(pairs.size());
    return out;
}

}  // namespace

TriangulationFeatures triangulation_features(const Triangulation& t) {
    double area = 0.0;
    for (int f = 0; f < t.face_count(); ++f) area += t.face_area(f);
    return features_from_graph(t, build_graph(t), area);
}

TriangulationFeatures triangulation_features(const CurvTriangulation& ct, int samples) {
    double area = 0.0;
    for (int f = 0; f < ct.base.face_count(); ++f) area += curv_triangle_area(ct, f, samples);
    return features_from_graph(ct.base, build_graph(ct, samples), area);
}

std::vector<Component> connected_components(const BinaryMask& mask, std::size_t min_pixels) {
    const int w = mask.width, h = mask.height;
    std::vector<int> label(mask.bits.size(), -1);
    std::vector<Component> out;
    std::vector<int> stack;
    for (int start = 0; start < static_cast<int>(mask.bits.size()); ++start) {
        if (!mask.bits[start] || label[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        Component comp;
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            comp.pixels.push_back(p);
            const int px = p % w, py = p / w;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = px + dx, ny = py + dy;
                    if ((dx == 0 && dy == 0) || nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    const int q = ny * w + nx;
                    if (!mask.bits[q] || label[q] >= 0) continue;
                    label[q] = id;
                    stack.push_back(q);
                }
            }
        }
        std::sort(comp.pixels.begin(), comp.pixels.end());
        out.push_back(std::move(comp));
    }
    std::erase_if(out, [&](const Component& c) { return c.pixels.size() < min_pixels; });
    std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return a.pixels.size() > b.pixels.size();
    });
    return out;
}

std::size_t min_pixels_for(const BinaryMask& mask, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) fail(ErrorKind::InvalidArgument, "min_pixels fraction must lie in [0, 1]");
    return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(mask.bits.size())));
}

ShapeFeatures component_features(const BinaryMask& mask, const Component& component, int orientations) {
    if (orientations < 1) fail(ErrorKind::InvalidArgument, "orientations must be >= 1");
    if (component.pixels.empty()) fail(ErrorKind::DegenerateInput, "empty component");
    std::vector<Point2> centers;
    centers.reserve(component.pixels.size());
    for (int p : component.pixels) {
        centers.push_back({static_cast<double>(p % mask.width), static_cast<double>(p / mask.width)});
    }

    ShapeFeatures f;
    std::vector<Point2> support = centers;
    try {
        const std::vector<int> hull = convex_hull(centers);
        support.clear();
        for (int i : hull) support.push_back(centers[i]);
        f.area = polygon_signed_area(support);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateInput) throw;
        f.area = static_cast<double>(centers.size());
    }

    double sum = 0.0;
    for (int k = 0; k < orientations; ++k) {
        const double theta = std::numbers::pi * k / orientations;
        const Point2 dir{std::cos(theta), std::sin(theta)};
        double lo = dot(dir, support.front()), hi = lo;
        for (const Point2& p : support) {
            lo = std::min(lo, dot(dir, p));
            hi = std::max(hi, dot(dir, p));
        }
        const double width = hi - lo + 1.0;
        f.dia_max = std::max(f.dia_max, width);
        sum += width;
    }
    f.dia_mean = sum / orientations;
    return f;
}

ShapeFeatures image_features(const BinaryMask& mask, int orientations, int keep, double min_pixel_fraction) {
    if (keep < 1) fail(ErrorKind::InvalidArgument, "keep must be >= 1");
    const std::vector<Component> comps = connected_components(mask, min_pixels_for(mask, min_pixel_fraction));
    if (comps.empty()) fail(ErrorKind::DegenerateInput, "mask has no components after filtering");
    ShapeFeatures total;
    const std::size_t used = std::min(comps.size(), static_cast<std::size_t>(keep));
    for (std::size_t i = 0; i < used; ++i) {
        const ShapeFeatures f = component_features(mask, comps[i], orientations);
        total.dia_max += f.dia_max;
        total.dia_mean += f.dia_mean;
        total.area += f.area;
    }
    return total;
}

RdVector relative_difference(const ShapeFeatures& approx, const ShapeFeatures& orig) {
    if (!approx.gdia) fail(ErrorKind::InvalidArgument, "approximation has no graph diameter");
    const auto rel = [](double a, double o, const char* name) {
        if (!(o > 0.0) || !std::isfinite(o)) {
            fail(ErrorKind::DegenerateInput, std::string("original ") + name + " must be positive");
        }
        return (a - o) / o;
    };
    return {rel(*approx.gdia, orig.gdia.value_or(orig.dia_max), "gdia"),
            rel(approx.dia_max, orig.dia_max, "dia_max"), rel(approx.dia_mean, orig.dia_mean, "dia_mean"),
            rel(approx.area, orig.area, "area")};
}

RdVector rd_difference(const RdVector& a, const RdVector& b) {
    return {a.gdia - b.gdia, a.dmax - b.dmax, a.dmean - b.dmean, a.area - b.area};
}

double rd_pnorm(const RdVector& a, const RdVector& b, double p) {
    if (std::isnan(p) || p < 1.0) fail(ErrorKind::InvalidArgument, "p-norm requires p >= 1");
    const auto diff = rd_difference(a, b).values();
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : diff) m = std::max(m, std::abs(v));
        return m;
    }
    double sum = 0.0;
    for (double v : diff) sum += std::pow(std::abs(v), p);
    return std::pow(sum, 1.0 / p);
}

nlohmann::json to_json(const ShapeFeatures& f) {
    nlohmann::json j = {{"gdia", nullptr}, {"dia_max", f.dia_max}, {"dia_mean", f.dia_mean}, {"area", f.area}};
    if (f.gdia) j["gdia"] = *f.gdia;
    return j;
}

nlohmann::json to_json(const RdVector& rd) {
    return {{"rd_gdia", rd.gdia}, {"rd_dmax", rd.dmax}, {"rd_dmean", rd.dmean}, {"rd_ar", rd.area}};
}

}  // namespace trishape
