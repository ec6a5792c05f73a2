#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "trishape/geometry.hpp"

namespace trishape {

struct NucleusChoice {
    int vertex = -1;
    int order = 0;      // faces incident to the nucleus
    int tied_with = 0;  // other vertices with the same order; 0 when the maximum is unique
};

/// Vertex with the most incident faces (the maximal nuclear cluster); ties go to the
/// lowest vertex index and are reported in `tied_with`.
NucleusChoice find_nucleus(const Triangulation& t);

/// Spoke level per face: 1 for faces containing the nucleus, m + 1 for faces first
/// reached from a level-m face through a shared vertex or edge.
std::vector<int> spoke_levels(const Triangulation& t, int nucleus);

struct BoundaryInfo {
    std::vector<int> boundary_edges;   // edge ids owned by exactly one face
    std::vector<int> boundary_spokes;  // faces owning at least one boundary edge
    std::vector<int> interior_spokes;  // all remaining faces
};

BoundaryInfo boundary(const Triangulation& t);

struct SpokeDecomposition {
    NucleusChoice nucleus;
    std::vector<int> level;                     // per face
    std::map<int, std::vector<int>> complexes;  // k -> faces, ascending
    BoundaryInfo bdy;

    int max_level() const { return complexes.empty() ? 0 : complexes.rbegin()->first; }
};

SpokeDecomposition decompose(const Triangulation& t);

/// Decomposition around a caller-chosen nucleus.
SpokeDecomposition decompose(const Triangulation& t, int nucleus);

/// True when every boundary spoke lies in the same spoke complex.
bool is_regular(const SpokeDecomposition& dec);

/// Faces A_1..A_k with A_j at level j; the nucleus is the implicit root.
struct SpokeChain {
    std::vector<int> faces;
};

struct ChainEnumeration {
    std::vector<SpokeChain> chains;
    bool truncated = false;
};

inline constexpr std::size_t kDefaultChainCap = 10000;

/// Maximal spoke chains, enumerated depth-first by ascending face index and stopped
/// after `cap` chains.
ChainEnumeration spoke_chains(const Triangulation& t, const SpokeDecomposition& dec,
                              std::size_t cap = kDefaultChainCap);

/// Faces that share at least one vertex.
bool faces_intersect(const Triangulation& t, int f, int g);

/// order -> number of vertices with that many incident faces.
std::map<int, int> nerve_order_histogram(const Triangulation& t);

nlohmann::json to_json(const Triangulation& t, const SpokeDecomposition& dec);

}  // namespace trishape
