#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trishape/complexes.hpp"
#include "trishape/error.hpp"

using namespace trishape;

namespace {

Triangulation fan(int spokes, bool closed) {
    std::vector<Point2> s = {{0, 0}};
    const int rim = closed ? spokes : spokes + 1;
    const double span = closed ? 2 * std::numbers::pi : std::numbers::pi;
    for (int k = 0; k < rim; ++k) {
        const double a = span * k / (closed ? rim : spokes);
        s.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<Triangle> f;
    for (int k = 0; k < spokes; ++k) f.push_back({0, 1 + k, 1 + (k + 1) % rim});
    return Triangulation::from_faces(std::move(s), std::move(f));
}

// Edge-adjacent strip a b c d e f, faces (a,b,c) (b,d,c) (c,d,e) (d,f,e).
Triangulation strip(int faces) {
    std::vector<Point2> s = {{0, 0}, {1, 1}, {1, -1}, {2, 1}, {2, -1}, {3, 1}};
    std::vector<Triangle> all = {{0, 2, 1}, {1, 2, 3}, {2, 4, 3}, {3, 4, 5}};
    all.resize(faces);
    return Triangulation::from_faces(std::move(s), std::move(all));
}

void check_structure(const Triangulation& t, const SpokeDecomposition& dec, std::size_t cap) {
    const int p = dec.nucleus.vertex;
    // Partition.
    std::vector<int> seen(t.face_count(), 0);
    for (const auto& [k, faces] : dec.complexes) {
        for (int f : faces) {
            ++seen[f];
            CHECK(dec.level[f] == k);
        }
    }
    for (int c : seen) CHECK(c == 1);
    // Level-1 characterization and agreement with the relaxation oracle.
    CHECK(dec.level == oracle::relaxed_levels(t, p));
    for (int f = 0; f < t.face_count(); ++f) CHECK((dec.level[f] == 1) == t.faces()[f].has_vertex(p));
    // Nerve cover.
    std::set<int> covered;
    for (int v = 0; v < t.vertex_count(); ++v) covered.insert(t.vertex_faces(v).begin(), t.vertex_faces(v).end());
    CHECK(static_cast<int>(covered.size()) == t.face_count());
    // Boundary edges by brute-force incidence count.
    for (int e = 0; e < t.edge_count(); ++e) {
        int owners = 0;
        for (const Triangle& f : t.faces()) owners += f.has_vertex(t.edges()[e].u) && f.has_vertex(t.edges()[e].v);
        const bool listed = std::binary_search(dec.bdy.boundary_edges.begin(), dec.bdy.boundary_edges.end(), e);
        CHECK(listed == (owners == 1));
    }
    // Chains.
    const ChainEnumeration ch = spoke_chains(t, dec, cap);
    REQUIRE_FALSE(ch.truncated);
    std::set<int> in_chains;
    for (const SpokeChain& c : ch.chains) {
        REQUIRE_FALSE(c.faces.empty());
        CHECK(t.faces()[c.faces.front()].has_vertex(p));
        for (std::size_t j = 0; j < c.faces.size(); ++j) {
            CHECK(dec.level[c.faces[j]] == static_cast<int>(j) + 1);
            if (j > 0) CHECK(faces_intersect(t, c.faces[j - 1], c.faces[j]));
            in_chains.insert(c.faces[j]);
        }
        // Maximal: no next-level face touches the last one.
        const int last = c.faces.back();
        for (int g = 0; g < t.face_count(); ++g) {
            if (dec.level[g] == dec.level[last] + 1) CHECK_FALSE(faces_intersect(t, last, g));
        }
    }
    CHECK(static_cast<int>(in_chains.size()) == t.face_count());
}

}  // namespace

TEST_CASE("nucleus of a fan is its center") {
    const Triangulation t = fan(4, false);
    const NucleusChoice n = find_nucleus(t);
    CHECK(n.vertex == 0);
    CHECK(n.order == 4);
    CHECK(n.tied_with == 0);
    const SpokeDecomposition dec = decompose(t);
    for (int k : dec.level) CHECK(k == 1);
    CHECK(nerve_order_histogram(t).at(4) == 1);
}

TEST_CASE("single triangle") {
    const Triangulation t = fixture::single_triangle();
    const NucleusChoice n = find_nucleus(t);
    CHECK(n.vertex == 0);
    CHECK(n.tied_with == 2);
    const SpokeDecomposition dec = decompose(t);
    CHECK(dec.bdy.boundary_edges.size() == 3);
    CHECK(dec.bdy.boundary_spokes == std::vector<int>{0});
    CHECK(dec.bdy.interior_spokes.empty());
    CHECK(is_regular(dec));
    CHECK(nerve_order_histogram(t) == std::map<int, int>{{1, 3}});
}

TEST_CASE("hexagon fan is regular with every face a boundary spoke") {
    const Triangulation t = fan(6, true);
    const SpokeDecomposition dec = decompose(t);
    CHECK(dec.nucleus.vertex == 0);
    CHECK(dec.bdy.boundary_spokes.size() == 6);
    CHECK(dec.bdy.interior_spokes.empty());
    CHECK(is_regular(dec));
}

TEST_CASE("levels along an edge-adjacent strip follow vertex contact") {
    // Every edge neighbour of the second face shares a vertex with the first, so a
    // three-face strip stays within two levels; the fourth face reaches level 3.
    const Triangulation t3 = strip(3);
    CHECK(spoke_levels(t3, 0) == std::vector<int>{1, 2, 2});
    const Triangulation t4 = strip(4);
    CHECK(spoke_levels(t4, 0) == std::vector<int>{1, 2, 2, 3});
    CHECK(spoke_levels(t4, 0) == oracle::relaxed_levels(t4, 0));
}

TEST_CASE("two edge-adjacent triangles give one chain") {
    const Triangulation t = strip(2);
    const SpokeDecomposition dec = decompose(t, 0);
    const ChainEnumeration ch = spoke_chains(t, dec);
    REQUIRE(ch.chains.size() == 1);
    CHECK(ch.chains[0].faces == std::vector<int>{0, 1});
}

TEST_CASE("spoke_levels rejects a bad nucleus") {
    const Triangulation t = fixture::single_triangle();
    CHECK_THROWS_AS(spoke_levels(t, 7), Error);
}

TEST_CASE("figure fixture: four spokes per level, irregular, one interior face") {
    const Triangulation t = fixture::two_level_fan();
    const SpokeDecomposition dec = decompose(t);
    CHECK(dec.nucleus.vertex == 0);
    CHECK(dec.nucleus.order == 4);
    CHECK(dec.nucleus.tied_with == 0);
    REQUIRE(dec.complexes.size() == 2);
    CHECK(dec.complexes.at(1) == std::vector<int>{0, 1, 2, 3});
    CHECK(dec.complexes.at(2) == std::vector<int>{4, 5, 6, 7});
    CHECK(dec.bdy.interior_spokes == std::vector<int>{1});
    CHECK(dec.bdy.boundary_spokes.size() == 7);
    CHECK_FALSE(is_regular(dec));
    check_structure(t, dec, kDefaultChainCap);

    const nlohmann::json j = to_json(t, dec);
    CHECK(j["regular"] == false);
    CHECK(j["nucleus"] == 0);
    CHECK(j["interior_spokes"] == nlohmann::json::array({1}));
}

TEST_CASE("three-face chain example") {
    const Triangulation t = fixture::tied_chains();
    const SpokeDecomposition dec = decompose(t);
    CHECK(dec.nucleus.vertex == 0);
    CHECK(dec.nucleus.tied_with == 2);
    const ChainEnumeration ch = spoke_chains(t, dec);
    REQUIRE(ch.chains.size() == 2);
    CHECK(ch.chains[0].faces == std::vector<int>{0, 2});
    CHECK(ch.chains[1].faces == std::vector<int>{1});
    CHECK(to_json(t, dec)["nucleus_tied_with"] == 2);
}

TEST_CASE("chain cap truncates") {
    const Triangulation t = fixture::two_level_fan();
    const SpokeDecomposition dec = decompose(t);
    const ChainEnumeration all = spoke_chains(t, dec);
    REQUIRE(all.chains.size() > 2);
    const ChainEnumeration capped = spoke_chains(t, dec, 2);
    CHECK(capped.truncated);
    CHECK(capped.chains.size() == 2);
    CHECK_FALSE(all.truncated);
}

TEST_CASE("random triangulations satisfy the complex-structure properties") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> count(8, 18);
    for (int trial = 0; trial < 20; ++trial) {
        const Triangulation t = delaunay_triangulate(fixture::random_sites(rng, count(rng)));
        const SpokeDecomposition dec = decompose(t);
        check_structure(t, dec, 200000);
        int incidences = 0;
        for (auto [order, n] : nerve_order_histogram(t)) incidences += order * n;
        CHECK(incidences == 3 * t.face_count());
    }
}
