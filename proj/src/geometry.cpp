#include "trishape/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "trishape/error.hpp"
#include "trishape/tolerances.hpp"

namespace trishape {

double orient2d(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation(Point2 a, Point2 b, Point2 c) {
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    const double det = l - r;
    const double mag = std::abs(l) + std::abs(r);
    if (std::abs(det) <= tol::kSignEps * mag) return 0;
    return det > 0 ? 1 : -1;
}

double incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
           clift * (adx * bdy - bdx * ady);
}

int incircle_sign(Point2 a, Point2 b, Point2 c, Point2 d, std::array<int, 4> ids) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                       clift * (adx * bdy - bdx * ady);
    const double mag = alift * (std::abs(bdx * cdy) + std::abs(cdx * bdy)) +
                       blift * (std::abs(cdx * ady) + std::abs(adx * cdy)) +
                       clift * (std::abs(adx * bdy) + std::abs(bdx * ady));
    if (std::abs(det) > tol::kSignEps * mag) return det > 0 ? 1 : -1;

    // The determinant is linear in the lifted coordinates; these are the coefficients of
    // the lifts of a, b, c and d.
    const std::array<int, 4> coef = {orientation(d, b, c), orientation(d, c, a), orientation(d, a, b),
                                      -orientation(a, b, c)};
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return ids[i] < ids[j]; });
    for (int k : order) {
        if (coef[k] != 0) return coef[k];
    }
    return 0;
}

double triangle_area(Point2 a, Point2 b, Point2 c) { return std::abs(orient2d(a, b, c)) / 2.0; }

double triangle_area(const Triangle& t, std::span<const Point2> sites) {
    return triangle_area(sites[t.a], sites[t.b], sites[t.c]);
}

double polygon_signed_area(std::span<const Point2> polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = polygon[i];
        const Point2& q = polygon[(i + 1) % n];
        sum += p.x * q.y - q.x * p.y;
    }
    return sum / 2.0;
}

double point_segment_distance(Point2 q, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(q, a);
    const double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
    return distance(q, a + t * ab);
}

bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c, double slack) {
    if (orient2d(a, b, c) < 0) std::swap(b, c);
    const auto inside_edge = [&](Point2 p0, Point2 p1) {
        if (orientation(p0, p1, q) >= 0) return true;
        return slack > 0.0 && point_segment_distance(q, p0, p1) <= slack;
    };
    if (inside_edge(a, b) && inside_edge(b, c) && inside_edge(c, a)) return true;
    if (slack <= 0.0) return false;
    // Near a vertex the per-edge test can reject points that are within slack of the
    // closed triangle; fall back to the true distance.
    return point_segment_distance(q, a, b) <= slack || point_segment_distance(q, b, c) <= slack ||
           point_segment_distance(q, c, a) <= slack;
}

std::vector<int> convex_hull(std::span<const Point2> points) {
    std::vector<int> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (const Point2& p : points) {
        if (!is_finite(p)) fail(ErrorKind::InvalidArgument, "convex_hull: non-finite coordinate");
    }
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        if (points[i].y != points[j].y) return points[i].y < points[j].y;
        return i < j;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](int i, int j) { return points[i] == points[j]; }),
              idx.end());
    if (idx.size() < 3) fail(ErrorKind::DegenerateInput, "convex_hull: fewer than 3 distinct points");

    std::vector<int> hull(2 * idx.size());
    std::size_t k = 0;
    for (int i : idx) {
        while (k >= 2 && orientation(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
        hull[k++] = i;
    }
    const std::size_t lower = k + 1;
    for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
        while (k >= lower && orientation(points[hull[k - 2]], points[hull[k - 1]], points[*it]) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() < 3) fail(ErrorKind::DegenerateInput, "convex_hull: all points are collinear");
    return hull;
}

double bounding_box_diagonal(std::span<const Point2> points) {
    if (points.empty()) return 0.0;
    double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
    for (const Point2& p : points) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

SnapResult snap_sites(std::span<const Point2> points, double fraction) {
    SnapResult out;
    out.input_to_site.reserve(points.size());
    const double radius = fraction * bounding_box_diagonal(points);
    for (const Point2& p : points) {
        if (!is_finite(p)) fail(ErrorKind::InvalidArgument, "site with non-finite coordinate");
        int found = -1;
        for (std::size_t s = 0; s < out.sites.size(); ++s) {
            if (distance(out.sites[s], p) <= radius) {
                found = static_cast<int>(s);
                break;
            }
        }
        if (found < 0) {
            found = static_cast<int>(out.sites.size());
            out.sites.push_back(p);
        }
        out.input_to_site.push_back(found);
    }
    return out;
}

// ---------------------------------------------------------------------------------------

Triangulation Triangulation::from_faces(std::vector<Point2> sites, std::vector<Triangle> faces) {
    if (faces.empty()) fail(ErrorKind::DegenerateInput, "triangulation has no faces");
    const int n = static_cast<int>(sites.size());
    for (const Point2& p : sites) {
        if (!is_finite(p)) fail(ErrorKind::InvalidArgument, "site with non-finite coordinate");
    }

    Triangulation t;
    t.sites_ = std::move(sites);
    t.faces_ = std::move(faces);
    std::map<Edge, std::array<int, 2>> adjacency;
    for (std::size_t f = 0; f < t.faces_.size(); ++f) {
        Triangle& tri = t.faces_[f];
        for (int v : tri.vertices()) {
            if (v < 0 || v >= n) fail(ErrorKind::InvalidArgument, "face references missing site");
        }
        if (tri.a == tri.b || tri.b == tri.c || tri.a == tri.c) {
            fail(ErrorKind::DegenerateInput, "face " + std::to_string(f) + " repeats a vertex");
        }
        const int o = orientation(t.sites_[tri.a], t.sites_[tri.b], t.sites_[tri.c]);
        if (o == 0) fail(ErrorKind::DegenerateInput, "face " + std::to_string(f) + " is collinear");
        if (o < 0) std::swap(tri.b, tri.c);
        for (const Edge e : {make_edge(tri.a, tri.b), make_edge(tri.b, tri.c), make_edge(tri.c, tri.a)}) {
            auto [it, inserted] = adjacency.try_emplace(e, std::array<int, 2>{static_cast<int>(f), -1});
            if (inserted) continue;
            if (it->second[1] != -1) {
                fail(ErrorKind::DegenerateInput, "edge shared by more than two faces");
            }
            it->second[1] = static_cast<int>(f);
        }
    }

    std::map<Edge, int> edge_ids;
    for (const auto& [edge, owners] : adjacency) {
        edge_ids.emplace(edge, static_cast<int>(t.edges_.size()));
        t.edges_.push_back(edge);
        t.edge_faces_.push_back(owners);
    }
    t.face_edges_.reserve(t.faces_.size());
    t.vertex_faces_.assign(n, {});
    for (std::size_t f = 0; f < t.faces_.size(); ++f) {
        const Triangle& tri = t.faces_[f];
        t.face_edges_.push_back({edge_ids.at(make_edge(tri.a, tri.b)), edge_ids.at(make_edge(tri.b, tri.c)),
                                 edge_ids.at(make_edge(tri.c, tri.a))});
        for (int v : tri.vertices()) t.vertex_faces_[v].push_back(static_cast<int>(f));
    }
    return t;
}

std::span<const int> Triangulation::edge_faces(int edge) const {
    const auto& owners = edge_faces_[edge];
    return {owners.data(), owners[1] < 0 ? std::size_t{1} : std::size_t{2}};
}

std::optional<int> Triangulation::find_edge(int a, int b) const {
    const Edge e = make_edge(a, b);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

Point2 Triangulation::centroid(int face) const {
    const Triangle& t = faces_[face];
    const Point2 s = sites_[t.a] + sites_[t.b] + sites_[t.c];
    return (1.0 / 3.0) * s;
}

double Triangulation::face_area(int face) const { return triangle_area(faces_[face], sites_); }

Triangulation Triangulation::with_sites(std::vector<Point2> sites) const {
    if (sites.size() != sites_.size()) fail(ErrorKind::InvalidArgument, "with_sites: site count differs");
    return from_faces(std::move(sites), faces_);
}

// ---------------------------------------------------------------------------------------

namespace {

constexpr int kGhost = -1;

// Bowyer-Watson state. Every triangle is counter-clockwise; a ghost triangle (u, v, ghost)
// sits outside the hull edge u -> v, so the exterior is to the left of u -> v.
class DelaunayBuilder {
public:
    explicit DelaunayBuilder(std::span<const Point2> sites) : sites_(sites) {}

    void seed(int a, int b, int c) {
        if (orient2d(sites_[a], sites_[b], sites_[c]) < 0) std::swap(b, c);
        add({a, b, c});
        add({b, a, kGhost});
        add({c, b, kGhost});
        add({a, c, kGhost});
    }

    void insert(int d) {
        const int start = find_seed(d);
        if (start < 0) return;  // numerically indistinguishable from an existing vertex

        std::vector<int> cavity{start};
        std::unordered_set<int> in_cavity{start};
        for (std::size_t head = 0; head < cavity.size(); ++head) {
            const auto& v = tris_[cavity[head]].v;
            for (int i = 0; i < 3; ++i) {
                const int nb = neighbor(v[(i + 1) % 3], v[i]);
                if (nb < 0 || in_cavity.contains(nb) || !is_bad(nb, d)) continue;
                in_cavity.insert(nb);
                cavity.push_back(nb);
            }
        }

        std::vector<std::array<int, 2>> rim;
        for (int t : cavity) {
            const auto& v = tris_[t].v;
            for (int i = 0; i < 3; ++i) {
                const int nb = neighbor(v[(i + 1) % 3], v[i]);
                if (!in_cavity.contains(nb)) rim.push_back({v[i], v[(i + 1) % 3]});
            }
        }
        for (int t : cavity) remove(t);
        for (const auto& [x, y] : rim) {
            if (x == kGhost) {
                add({y, d, kGhost});
            } else if (y == kGhost) {
                add({d, x, kGhost});
            } else {
                add({x, y, d});
            }
        }
    }

    std::vector<Triangle> real_faces() const {
        std::vector<Triangle> out;
        for (const auto& t : tris_) {
            if (!t.alive || t.v[2] == kGhost) continue;
            // Rotate so the smallest index leads; orientation is preserved.
            std::array<int, 3> v = t.v;
            std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
            out.push_back({v[0], v[1], v[2]});
        }
        std::sort(out.begin(), out.end(), [](const Triangle& l, const Triangle& r) {
            return l.vertices() < r.vertices();
        });
        return out;
    }

private:
    struct Tri {
        std::array<int, 3> v;
        bool alive = true;
    };

    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a + 1)) << 32) |
               static_cast<std::uint32_t>(b + 1);
    }

    void add(std::array<int, 3> v) {
        // Ghost always in the last slot.
        if (v[0] == kGhost) v = {v[1], v[2], v[0]};
        if (v[1] == kGhost) v = {v[2], v[0], v[1]};
        const int id = static_cast<int>(tris_.size());
        tris_.push_back({v, true});
        for (int i = 0; i < 3; ++i) edge_owner_[key(v[i], v[(i + 1) % 3])] = id;
    }

    void remove(int t) {
        tris_[t].alive = false;
        const auto& v = tris_[t].v;
        for (int i = 0; i < 3; ++i) {
            const auto it = edge_owner_.find(key(v[i], v[(i + 1) % 3]));
            if (it != edge_owner_.end() && it->second == t) edge_owner_.erase(it);
        }
    }

    int neighbor(int a, int b) const {
        const auto it = edge_owner_.find(key(a, b));
        return it == edge_owner_.end() ? -1 : it->second;
    }

    bool strictly_between(Point2 q, Point2 a, Point2 b) const {
        return dot(q - a, b - a) > 0 && dot(q - b, a - b) > 0;
    }

    bool is_bad(int t, int d) const {
        const auto& v = tris_[t].v;
        const Point2 q = sites_[d];
        if (v[2] == kGhost) {
            const int o = orientation(sites_[v[0]], sites_[v[1]], q);
            return o > 0 || (o == 0 && strictly_between(q, sites_[v[0]], sites_[v[1]]));
        }
        return incircle_sign(sites_[v[0]], sites_[v[1]], sites_[v[2]], q, {v[0], v[1], v[2], d}) > 0;
    }

    int find_seed(int d) const {
        const Point2 q = sites_[d];
        int fallback = -1;
        for (std::size_t i = 0; i < tris_.size(); ++i) {
            const Tri& t = tris_[i];
            if (!t.alive) continue;
            const int id = static_cast<int>(i);
            if (t.v[2] == kGhost) {
                if (orientation(sites_[t.v[0]], sites_[t.v[1]], q) > 0) return id;
                if (fallback < 0 && is_bad(id, d)) fallback = id;
                continue;
            }
            const Point2 a = sites_[t.v[0]], b = sites_[t.v[1]], c = sites_[t.v[2]];
            if (orientation(a, b, q) >= 0 && orientation(b, c, q) >= 0 && orientation(c, a, q) >= 0) {
                return id;
            }
            if (fallback < 0 && is_bad(id, d)) fallback = id;
        }
        return fallback;
    }

    std::span<const Point2> sites_;
    std::vector<Tri> tris_;
    std::unordered_map<std::uint64_t, int> edge_owner_;
};

}  // namespace

Triangulation delaunay_triangulate(std::span<const Point2> input) {
    SnapResult snapped = snap_sites(input, tol::kSnapFraction);
    const std::vector<Point2>& sites = snapped.sites;
    const int n = static_cast<int>(sites.size());
    if (n < 3) fail(ErrorKind::DegenerateInput, "delaunay: fewer than 3 usable sites");

    int third = -1;
    for (int i = 2; i < n; ++i) {
        if (orientation(sites[0], sites[1], sites[i]) != 0) {
            third = i;
            break;
        }
    }
    if (third < 0) fail(ErrorKind::DegenerateInput, "delaunay: all sites are collinear");

    DelaunayBuilder builder(sites);
    builder.seed(0, 1, third);
    for (int i = 2; i < n; ++i) {
        if (i != third) builder.insert(i);
    }
    std::vector<Triangle> faces = builder.real_faces();
    return Triangulation::from_faces(std::move(snapped.sites), std::move(faces));
}

}  // namespace trishape
