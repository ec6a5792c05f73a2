#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trishape {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Vertex indices into a site list.
struct Triangle {
    int a = 0;
    int b = 0;
    int c = 0;

    std::array<int, 3> vertices() const { return {a, b, c}; }
    bool has_vertex(int v) const { return a == v || b == v || c == v; }
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Orientation sign of (a, b, c): +1 counter-clockwise, -1 clockwise, 0 collinear
// within the relative tolerance.
int orientation(Point2 a, Point2 b, Point2 c);

// Twice the signed area of (a, b, c).
double orient2d(Point2 a, Point2 b, Point2 c);

// Positive when d lies inside the circumcircle of the counter-clockwise triangle (a, b, c).
double incircle(Point2 a, Point2 b, Point2 c, Point2 d);

// Sign of incircle with a deterministic symbolic tie-break. The lifted coordinate of
// each point is perturbed by an infinitesimal that shrinks with the point's id, so
// cocircular configurations resolve consistently.
int incircle_sign(Point2 a, Point2 b, Point2 c, Point2 d, std::array<int, 4> ids);

double triangle_area(Point2 a, Point2 b, Point2 c);
double triangle_area(const Triangle& t, std::span<const Point2> sites);

// Signed shoelace area; positive for counter-clockwise polygons.
double polygon_signed_area(std::span<const Point2> polygon);

// Closed point-in-triangle test with an absolute slack (distance units).
bool point_in_triangle(Point2 q, Point2 a, Point2 b, Point2 c, double slack = 0.0);

double point_segment_distance(Point2 q, Point2 a, Point2 b);

/// Indices of the strictly convex hull in counter-clockwise order, starting at the
/// lexicographically smallest point. Collinear boundary points are excluded.
std::vector<int> convex_hull(std::span<const Point2> points);

double bounding_box_diagonal(std::span<const Point2> points);

struct SnapResult {
    std::vector<Point2> sites;
    std::vector<int> input_to_site;
};

/// Merges points closer than `fraction` times the bounding-box diagonal, keeping the
/// first occurrence.
SnapResult snap_sites(std::span<const Point2> points, double fraction);

/// Sites, counter-clockwise faces, sorted edges, and edge/face adjacency. Immutable.
class Triangulation {
public:
    Triangulation() = default;

    /// Validates indices and orientation; clockwise faces are reoriented.
    static Triangulation from_faces(std::vector<Point2> sites, std::vector<Triangle> faces);

    const std::vector<Point2>& sites() const { return sites_; }
    const std::vector<Triangle>& faces() const { return faces_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_count() const { return static_cast<int>(sites_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> edge_faces(int edge) const;
    const std::array<int, 3>& face_edges(int face) const { return face_edges_[face]; }
    std::optional<int> find_edge(int a, int b) const;

    const std::vector<int>& vertex_faces(int vertex) const { return vertex_faces_[vertex]; }
    bool is_boundary_edge(int edge) const { return edge_faces(edge).size() == 1; }

    Point2 centroid(int face) const;
    double face_area(int face) const;

    /// Same combinatorics over relocated sites. Faces must stay non-degenerate.
    Triangulation with_sites(std::vector<Point2> sites) const;

private:
    std::vector<Point2> sites_;
    std::vector<Triangle> faces_;
    std::vector<Edge> edges_;
    std::vector<std::array<int, 2>> edge_faces_;  // second slot -1 for boundary edges
    std::vector<std::array<int, 3>> face_edges_;
    std::vector<std::vector<int>> vertex_faces_;
};

/// Delaunay triangulation by incremental Bowyer-Watson insertion with ghost triangles
/// on the hull. Sites are snapped first; the result's site list is the snapped list.
Triangulation delaunay_triangulate(std::span<const Point2> sites);

}  // namespace trishape
