#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trishape/geometry.hpp"
#include "trishape/splines.hpp"

namespace trishape {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Undirected graph with positive finite edge weights.
class WeightedGraph {
public:
    struct Arc {
        int to;
        double weight;
    };

    explicit WeightedGraph(int vertex_count = 0);

    void add_edge(int u, int v, double weight);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<Arc>& neighbors(int v) const { return adjacency_[v]; }

private:
    std::vector<std::vector<Arc>> adjacency_;
};

/// Rectilinear edge weights: Euclidean lengths.
WeightedGraph build_graph(const Triangulation& t);

/// Curvilinear edge weights: chord-sum arc length with `samples` parameter values.
WeightedGraph build_graph(const CurvTriangulation& ct, int samples);

struct ShortestPaths {
    int source = 0;
    std::vector<double> dist;
    std::vector<int> pred;  // -1 for the source and unreachable vertices
};

/// Single-source shortest paths with a lazily-pruned binary heap. Equal distances are
/// settled in vertex order.
ShortestPaths dijkstra(const WeightedGraph& g, int source);

/// Vertices from the source to `target`; empty when unreachable.
std::vector<int> geodesic_path(const ShortestPaths& sp, int target);

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const double> row(int i) const { return {d_.data() + static_cast<std::size_t>(i) * n_, std::size_t(n_)}; }

private:
    int n_ = 0;
    std::vector<double> d_;
};

/// All-pairs distances, one Dijkstra run per row. Rows are independent, so `threads > 1`
/// splits them across workers with bit-identical results.
DistanceMatrix distance_matrix(const WeightedGraph& g, int threads = 1);

struct Diameter {
    double value = 0.0;
    int u = 0;
    int v = 0;
};

/// Largest entry and its lexicographically smallest realizing pair. Throws
/// DisconnectedGraph (with the component count) if any entry is unreachable.
Diameter graph_diameter(const DistanceMatrix& m);

int component_count(const DistanceMatrix& m);

/// One row per line, comma separated; unreachable entries written as "inf".
std::string to_csv(const DistanceMatrix& m);

/// Parses "u,v,w" lines with 1-based vertices. Blank lines and '#' comments are skipped.
WeightedGraph parse_graph_csv(std::string_view text);

}  // namespace trishape
