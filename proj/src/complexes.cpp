#include "trishape/complexes.hpp"

#include <algorithm>
#include <string>

#include "trishape/error.hpp"

namespace trishape {

NucleusChoice find_nucleus(const Triangulation& t) {
    if (t.face_count() == 0) fail(ErrorKind::DegenerateInput, "find_nucleus: empty triangulation");
    NucleusChoice best;
    for (int v = 0; v < t.vertex_count(); ++v) {
        const int order = static_cast<int>(t.vertex_faces(v).size());
        if (order > best.order) {
            best = {v, order, 0};
        } else if (order == best.order && order > 0) {
            ++best.tied_with;
        }
    }
    return best;
}

bool faces_intersect(const Triangulation& t, int f, int g) {
    const Triangle& a = t.faces()[f];
    const Triangle& b = t.faces()[g];
    return b.has_vertex(a.a) || b.has_vertex(a.b) || b.has_vertex(a.c);
}

std::vector<int> spoke_levels(const Triangulation& t, int nucleus) {
    if (nucleus < 0 || nucleus >= t.vertex_count() || t.vertex_faces(nucleus).empty()) {
        fail(ErrorKind::InvalidArgument, "spoke_levels: nucleus " + std::to_string(nucleus) +
                                             " is not a vertex of the triangulation");
    }
    std::vector<int> level(t.face_count(), 0);
    std::vector<int> frontier = t.vertex_faces(nucleus);
    std::sort(frontier.begin(), frontier.end());
    for (int f : frontier) level[f] = 1;

    // Breadth-first over the face-intersection graph: faces meeting a level-m face
    // through any vertex get level m + 1.
    for (int k = 1; !frontier.empty(); ++k) {
        std::vector<int> next;
        for (int f : frontier) {
            for (int v : t.faces()[f].vertices()) {
                for (int g : t.vertex_faces(v)) {
                    if (level[g] != 0) continue;
                    level[g] = k + 1;
                    next.push_back(g);
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    for (int f = 0; f < t.face_count(); ++f) {
        if (level[f] == 0) {
            fail(ErrorKind::DegenerateInput,
                 "spoke_levels: face " + std::to_string(f) + " is not connected to the nucleus");
        }
    }
    return level;
}

BoundaryInfo boundary(const Triangulation& t) {
    BoundaryInfo info;
    std::vector<bool> is_bdy_face(t.face_count(), false);
    for (int e = 0; e < t.edge_count(); ++e) {
        if (!t.is_boundary_edge(e)) continue;
        info.boundary_edges.push_back(e);
        is_bdy_face[t.edge_faces(e)[0]] = true;
    }
    for (int f = 0; f < t.face_count(); ++f) {
        (is_bdy_face[f] ? info.boundary_spokes : info.interior_spokes).push_back(f);
    }
    return info;
}

SpokeDecomposition decompose(const Triangulation& t, int nucleus) {
    SpokeDecomposition dec;
    dec.nucleus.vertex = nucleus;
    dec.nucleus.order = static_cast<int>(t.vertex_faces(nucleus).size());
    dec.level = spoke_levels(t, nucleus);
    for (int f = 0; f < t.face_count(); ++f) dec.complexes[dec.level[f]].push_back(f);
    dec.bdy = boundary(t);
    return dec;
}

SpokeDecomposition decompose(const Triangulation& t) {
    const NucleusChoice choice = find_nucleus(t);
    SpokeDecomposition dec = decompose(t, choice.vertex);
    dec.nucleus = choice;
    return dec;
}

bool is_regular(const SpokeDecomposition& dec) {
    const auto& spokes = dec.bdy.boundary_spokes;
    return std::all_of(spokes.begin(), spokes.end(),
                       [&](int f) { return dec.level[f] == dec.level[spokes.front()]; });
}

namespace {

class ChainWalker {
public:
    ChainWalker(const Triangulation& t, const SpokeDecomposition& dec, std::size_t cap)
        : t_(t), dec_(dec), cap_(cap) {}

    ChainEnumeration run() {
        const auto first = dec_.complexes.find(1);
        if (first == dec_.complexes.end()) return std::move(out_);
        for (int f : first->second) {
            if (out_.truncated) break;
            path_.push_back(f);
            extend();
            path_.pop_back();
        }
        return std::move(out_);
    }

private:
    void extend() {
        const int last = path_.back();
        const int k = dec_.level[last];
        bool extended = false;
        if (const auto next = dec_.complexes.find(k + 1); next != dec_.complexes.end()) {
            for (int g : next->second) {
                if (out_.truncated) return;
                if (!faces_intersect(t_, last, g)) continue;
                extended = true;
                path_.push_back(g);
                extend();
                path_.pop_back();
            }
        }
        if (extended || out_.truncated) return;
        if (out_.chains.size() >= cap_) {
            out_.truncated = true;
            return;
        }
        out_.chains.push_back({path_});
    }

    const Triangulation& t_;
    const SpokeDecomposition& dec_;
    std::size_t cap_;
    std::vector<int> path_;
    ChainEnumeration out_;
};

}  // namespace

ChainEnumeration spoke_chains(const Triangulation& t, const SpokeDecomposition& dec, std::size_t cap) {
    return ChainWalker(t, dec, cap).run();
}

std::map<int, int> nerve_order_histogram(const Triangulation& t) {
    std::map<int, int> histogram;
    for (int v = 0; v < t.vertex_count(); ++v) ++histogram[static_cast<int>(t.vertex_faces(v).size())];
    return histogram;
}

nlohmann::json to_json(const Triangulation& t, const SpokeDecomposition& dec) {
    nlohmann::json levels = nlohmann::json::array();
    for (int f = 0; f < t.face_count(); ++f) levels.push_back({f, dec.level[f]});
    nlohmann::json edges = nlohmann::json::array();
    for (int e : dec.bdy.boundary_edges) edges.push_back({t.edges()[e].u, t.edges()[e].v});
    nlohmann::json histogram = nlohmann::json::array();
    for (const auto& [order, count] : nerve_order_histogram(t)) histogram.push_back({order, count});
    return {
        {"nucleus", dec.nucleus.vertex},
        {"nucleus_order", dec.nucleus.order},
        {"nucleus_tied_with", dec.nucleus.tied_with},
        {"levels", levels},
        {"boundary_edges", edges},
        {"boundary_spokes", dec.bdy.boundary_spokes},
        {"interior_spokes", dec.bdy.interior_spokes},
        {"regular", is_regular(dec)},
        {"histogram", histogram},
    };
}

}  // namespace trishape
