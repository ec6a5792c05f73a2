#include "trishape/geodesics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <queue>
#include <thread>

#include "trishape/error.hpp"

namespace trishape {

WeightedGraph::WeightedGraph(int vertex_count) : adjacency_(std::max(vertex_count, 0)) {}

void WeightedGraph::add_edge(int u, int v, double weight) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::InvalidArgument, "self-loop edges are not allowed");
    if (!(weight > 0.0) || !std::isfinite(weight)) {
        fail(ErrorKind::InvalidArgument, "edge weights must be positive and finite");
    }
    adjacency_[u].push_back({v, weight});
    adjacency_[v].push_back({u, weight});
}

WeightedGraph build_graph(const Triangulation& t) {
    WeightedGraph g(t.vertex_count());
    for (const Edge& e : t.edges()) g.add_edge(e.u, e.v, distance(t.sites()[e.u], t.sites()[e.v]));
    return g;
}

WeightedGraph build_graph(const CurvTriangulation& ct, int samples) {
    WeightedGraph g(ct.base.vertex_count());
    for (int e = 0; e < ct.base.edge_count(); ++e) {
        const Edge& edge = ct.base.edges()[e];
        g.add_edge(edge.u, edge.v, curve_arc_length(ct.edge_curves[e], samples));
    }
    return g;
}

ShortestPaths dijkstra(const WeightedGraph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) {
        fail(ErrorKind::InvalidArgument, "dijkstra: source " + std::to_string(source) + " out of range");
    }
    ShortestPaths sp{source, std::vector<double>(n, kUnreachable), std::vector<int>(n, -1)};
    std::vector<bool> settled(n, false);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    sp.dist[source] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;  // stale entry
        settled[u] = true;
        for (const auto& arc : g.neighbors(u)) {
            const double candidate = d + arc.weight;
            if (candidate < sp.dist[arc.to]) {
                sp.dist[arc.to] = candidate;
                sp.pred[arc.to] = u;
                queue.push({candidate, arc.to});
            }
        }
    }
    return sp;
}

std::vector<int> geodesic_path(const ShortestPaths& sp, int target) {
    if (target < 0 || target >= static_cast<int>(sp.dist.size())) {
        fail(ErrorKind::InvalidArgument, "geodesic_path: target out of range");
    }
    if (sp.dist[target] == kUnreachable) return {};
    std::vector<int> path;
    for (int v = target; v != -1; v = sp.pred[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

DistanceMatrix distance_matrix(const WeightedGraph& g, int threads) {
    const int n = g.vertex_count();
    DistanceMatrix m(n);
    const auto fill_rows = [&](int begin, int stride) {
        for (int i = begin; i < n; i += stride) {
            const ShortestPaths sp = dijkstra(g, i);
            std::copy(sp.dist.begin(), sp.dist.end(), &m(i, 0));
        }
    };
    const int workers = std::clamp(threads, 1, std::max(n, 1));
    if (workers == 1) {
        fill_rows(0, 1);
        return m;
    }
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
    pool.clear();
    return m;
}

int component_count(const DistanceMatrix& m) {
    std::vector<int> label(m.size(), -1);
    int count = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (label[i] >= 0) continue;
        for (int j = 0; j < m.size(); ++j) {
            if (m(i, j) != kUnreachable) label[j] = count;
        }
        ++count;
    }
    return count;
}

Diameter graph_diameter(const DistanceMatrix& m) {
    if (m.size() == 0) fail(ErrorKind::DegenerateInput, "graph_diameter: empty graph");
    Diameter best{0.0, 0, 0};
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            const double d = m(i, j);
            if (d == kUnreachable) {
                const int parts = component_count(m);
                fail(ErrorKind::DisconnectedGraph,
                     "graph has " + std::to_string(parts) + " connected components");
            }
            if (d > best.value) best = {d, i, j};
        }
    }
    return best;
}

namespace {

std::string format_number(double v) {
    if (v == kUnreachable) return "inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string to_csv(const DistanceMatrix& m) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j > 0) out += ',';
            out += format_number(m(i, j));
        }
        out += '\n';
    }
    return out;
}

WeightedGraph parse_graph_csv(std::string_view text) {
    struct Row {
        long u, v;
        double w;
    };
    std::vector<Row> rows;
    long max_vertex = 0;
    int line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::array<std::string_view, 3> fields;
        std::size_t count = 0;
        while (count < 3) {
            const std::size_t comma = line.find(',');
            fields[count++] = trim(line.substr(0, comma));
            if (comma == std::string_view::npos) {
                line = {};
                break;
            }
            line = line.substr(comma + 1);
        }
        const auto bad = [&](const std::string& what) {
            fail(ErrorKind::ParseError, "graph CSV line " + std::to_string(line_no) + ": " + what);
        };
        if (count != 3 || !trim(line).empty()) bad("expected u,v,w");
        Row row{};
        const auto pu = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.u);
        const auto pv = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), row.v);
        const auto pw = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), row.w);
        const bool numeric = pu.ec == std::errc{} && pv.ec == std::errc{} && pw.ec == std::errc{} &&
                             pu.ptr == fields[0].data() + fields[0].size() &&
                             pv.ptr == fields[1].data() + fields[1].size() &&
                             pw.ptr == fields[2].data() + fields[2].size();
        if (!numeric) {
            if (rows.empty() && line_no == 1) continue;  // header
            bad("non-numeric field");
        }
        if (row.u < 1 || row.v < 1) bad("vertices are 1-based");
        if (row.u == row.v) bad("self-loop");
        if (!(row.w > 0.0) || !std::isfinite(row.w)) bad("weight must be positive and finite");
        max_vertex = std::max({max_vertex, row.u, row.v});
        rows.push_back(row);
    }
    if (rows.empty()) fail(ErrorKind::ParseError, "graph CSV has no edges");
    WeightedGraph g(static_cast<int>(max_vertex));
    for (const Row& r : rows) g.add_edge(static_cast<int>(r.u - 1), static_cast<int>(r.v - 1), r.w);
    return g;
}

}  // namespace trishape
