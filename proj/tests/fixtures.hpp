#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "trishape/geometry.hpp"
#include "trishape/image.hpp"

namespace fixture {

using trishape::BinaryMask;
using trishape::Point2;
using trishape::Triangle;
using trishape::Triangulation;

// Nucleus p with four 1-spokes fanned above it and four 2-spokes hanging off their
// outer vertices. Only pBC is enclosed.
inline Triangulation two_level_fan() {
    std::vector<Point2> s = {
        {0, 0},       // 0 p
        {3, 0},       // 1 A
        {2, 2.2},     // 2 B
        {0, 3},       // 3 C
        {-2, 2.2},    // 4 D
        {-3, 0},      // 5 E
        {1.5, 3.5},   // 6 X
        {4.5, 1},     // 7 Q
        {4.5, -1},    // 8 R
        {-3.5, 2.5},  // 9 Z
        {-4.5, -0.5}, // 10 W
        {-3.5, -1.5}, // 11 V
    };
    std::vector<Triangle> f = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},       // level 1
        {2, 6, 3}, {1, 8, 7}, {4, 9, 5}, {5, 10, 11},     // level 2
    };
    return Triangulation::from_faces(std::move(s), std::move(f));
}

// Two level-1 faces on p, one level-2 face touching only the first.
inline Triangulation tied_chains() {
    std::vector<Point2> s = {{0, 0}, {2, 0}, {1, 1.5}, {-1, 1.5}, {-2, 0}, {2.5, 2}};
    std::vector<Triangle> f = {{0, 1, 2}, {0, 3, 4}, {1, 2, 5}};
    return Triangulation::from_faces(std::move(s), std::move(f));
}

inline Triangulation single_triangle() {
    return Triangulation::from_faces({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
}

inline std::vector<Point2> random_sites(std::mt19937_64& rng, int n, double extent = 100.0) {
    std::uniform_real_distribution<double> u(0.0, extent);
    std::vector<Point2> s(n);
    for (auto& p : s) p = {u(rng), u(rng)};
    return s;
}

inline std::vector<Point2> ring_sites(int count, Point2 center, double radius) {
    std::vector<Point2> s = {center};
    for (int k = 0; k < count; ++k) {
        const double a = 2.0 * std::numbers::pi * k / count;
        s.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return s;
}

inline BinaryMask disk_mask(int size, Point2 center, double radius) {
    BinaryMask m(size, size);
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            if (std::hypot(x - center.x, y - center.y) <= radius) m.set(x, y);
        }
    }
    return m;
}

inline BinaryMask random_mask(std::mt19937_64& rng, int w, int h, double density) {
    std::bernoulli_distribution on(density);
    BinaryMask m(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) m.set(x, y, on(rng));
    }
    return m;
}

/// Random connected-or-not weighted graph with n vertices.
inline std::vector<oracle::GraphEdge> random_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution pick(density);
    std::uniform_real_distribution<double> w(0.1, 10.0);
    std::vector<oracle::GraphEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (pick(rng)) edges.push_back({u, v, w(rng)});
        }
    }
    return edges;
}

}  // namespace fixture
