#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trishape/error.hpp"
#include "trishape/shape_metrics.hpp"

using namespace trishape;

namespace {

const RdVector kCarRect{-0.069, -0.069, -0.372, -0.423};
const RdVector kCarCurv{0.051, 0.051, -0.308, -0.433};

BinaryMask rect_mask(int w, int h, int x0, int y0, int rw, int rh) {
    BinaryMask m(w, h);
    for (int y = y0; y < y0 + rh; ++y) {
        for (int x = x0; x < x0 + rw; ++x) m.set(x, y);
    }
    return m;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("boundary vertex partition") {
    const std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const VertexPartition p = boundary_vertex_partition(square);
    CHECK(p.above.size() == 2);
    CHECK(p.below.size() == 2);
    CHECK(p.left.size() == 2);
    CHECK(p.right.size() == 2);

    const std::vector<Point2> flat = {{0, 1}, {1, 1}, {2, 1}};
    const VertexPartition q = boundary_vertex_partition(flat);
    CHECK(q.above.empty());
    CHECK(q.below.size() == 3);

    std::mt19937_64 rng(51);
    const auto pts = fixture::random_sites(rng, 20);
    const VertexPartition r = boundary_vertex_partition(pts);
    CHECK(r.above.size() + r.below.size() == 20);
    CHECK(r.left.size() + r.right.size() == 20);
}

TEST_CASE("features of a single right triangle") {
    const Triangulation t = fixture::single_triangle();
    const TriangulationFeatures f = triangulation_features(t);
    CHECK(f.features.area == doctest::Approx(0.5));
    CHECK(*f.features.gdia == doctest::Approx(std::sqrt(2.0)));
    CHECK(boundary_vertices(t).size() == 3);
    CHECK(f.features.dia_max == doctest::Approx(std::sqrt(2.0)));
    CHECK(f.features.dia_mean == doctest::Approx((2.0 + std::sqrt(2.0)) / 3.0));
}

TEST_CASE("zero bend reproduces the rectilinear features") {
    const Triangulation t = fixture::two_level_fan();
    const SpokeDecomposition dec = decompose(t);
    const ShapeFeatures r = triangulation_features(t).features;
    const ShapeFeatures c = triangulation_features(curvilinearize(t, dec, 0.0), 64).features;
    CHECK(std::abs(*r.gdia - *c.gdia) <= 1e-9);
    CHECK(std::abs(r.dia_max - c.dia_max) <= 1e-9);
    CHECK(std::abs(r.dia_mean - c.dia_mean) <= 1e-9);
    CHECK(std::abs(r.area - c.area) <= 1e-9);
}

TEST_CASE("diameter never exceeds the graph diameter") {
    const ShapeFeatures fig = triangulation_features(fixture::two_level_fan()).features;
    CHECK(fig.dia_max <= *fig.gdia);
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const Triangulation t = delaunay_triangulate(fixture::random_sites(rng, 25));
        const ShapeFeatures f = triangulation_features(t).features;
        CHECK(f.dia_max <= *f.gdia);
        CHECK(f.dia_mean <= f.dia_max);
        const ShapeFeatures c = triangulation_features(curvilinearize(t, decompose(t)), 64).features;
        CHECK(c.area <= f.area);
    }
}

TEST_CASE("connected components") {
    BinaryMask two(10, 5);
    for (int y = 1; y < 4; ++y) {
        for (int x = 0; x < 3; ++x) two.set(x, y);
        for (int x = 6; x < 9; ++x) two.set(x, y);
    }
    const auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].pixels.size() == 9);
    CHECK(comps[1].pixels.size() == 9);
    CHECK(comps[0].pixels.front() < comps[1].pixels.front());

    CHECK(connected_components(BinaryMask(8, 8)).empty());
    CHECK(kind_of([] { image_features(BinaryMask(8, 8)); }) == ErrorKind::DegenerateInput);

    BinaryMask diag(3, 3);
    diag.set(0, 0);
    diag.set(1, 1);
    diag.set(2, 2);
    CHECK(connected_components(diag).size() == 1);
}

TEST_CASE("components equal the flood-fill oracle") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> side(1, 32);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryMask m = fixture::random_mask(rng, side(rng), side(rng), density(rng));
        const auto comps = connected_components(m);
        std::set<std::vector<int>> got;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            got.insert(comps[i].pixels);
            if (i > 0) CHECK(comps[i - 1].pixels.size() >= comps[i].pixels.size());
        }
        CHECK(got == oracle::flood_fill(m));
    }
}

TEST_CASE("small components are filtered") {
    BinaryMask m = rect_mask(100, 100, 10, 10, 30, 30);
    m.set(80, 80);
    CHECK(min_pixels_for(m, 0.001) == 10);
    CHECK(connected_components(m, min_pixels_for(m, 0.001)).size() == 1);
    CHECK(connected_components(m).size() == 2);
    CHECK_THROWS_AS(min_pixels_for(m, 1.5), Error);
}

TEST_CASE("mask feature examples") {
    const BinaryMask row = rect_mask(12, 3, 1, 1, 10, 1);
    const ShapeFeatures r = image_features(row, 4, 1, 0.0);
    CHECK(r.dia_max == doctest::Approx(10.0));
    CHECK(r.area == 10.0);  // collinear centers fall back to the pixel count

    const BinaryMask dot = rect_mask(5, 5, 2, 2, 1, 1);
    const ShapeFeatures d = image_features(dot, 36, 1, 0.0);
    CHECK(d.dia_max == 1.0);
    CHECK(d.dia_mean == 1.0);
    CHECK(d.area == 1.0);

    // The width convention (center projections plus one pixel) gives 4 * sqrt(2) + 1
    // on the diagonal of a 5x5 block.
    const BinaryMask square = rect_mask(9, 9, 2, 2, 5, 5);
    const ShapeFeatures s = image_features(square, 36, 1, 0.0);
    const auto comp = connected_components(square).front();
    double best = 0.0;
    for (int k = 0; k < 36; ++k) best = std::max(best, oracle::pixel_width(comp.pixels, 9, std::numbers::pi * k / 36));
    CHECK(s.dia_max == doctest::Approx(best).epsilon(1e-12));
    CHECK(s.dia_max == doctest::Approx(4 * std::sqrt(2.0) + 1).epsilon(1e-12));
    CHECK(s.area == doctest::Approx(16.0));
}

TEST_CASE("mask widths and areas match brute force") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 30; ++trial) {
        const BinaryMask m = fixture::random_mask(rng, 20, 20, 0.55);
        const auto comps = connected_components(m);
        const ShapeFeatures f = component_features(m, comps.front(), 12);
        double best = 0.0, sum = 0.0;
        for (int k = 0; k < 12; ++k) {
            const double w = oracle::pixel_width(comps.front().pixels, 20, std::numbers::pi * k / 12);
            best = std::max(best, w);
            sum += w;
        }
        CHECK(f.dia_max == doctest::Approx(best).epsilon(1e-12));
        CHECK(f.dia_mean == doctest::Approx(sum / 12).epsilon(1e-12));
        std::vector<Point2> centers;
        for (int p : comps.front().pixels) centers.push_back({double(p % 20), double(p / 20)});
        CHECK(f.area == doctest::Approx(oracle::shoelace(oracle::jarvis_hull(centers))).epsilon(1e-12));
    }
}

TEST_CASE("mask features are translation and quarter-turn invariant") {
    const BinaryMask a = fixture::disk_mask(40, {15, 15}, 9.3);
    BinaryMask b(40, 40), rotated(40, 40);
    for (int y = 0; y < 40; ++y) {
        for (int x = 0; x < 40; ++x) {
            if (!a.at(x, y)) continue;
            b.set(x + 7, y + 11);
            rotated.set(39 - y, x);
        }
    }
    const ShapeFeatures fa = image_features(a), fb = image_features(b), fr = image_features(rotated);
    CHECK(fa.dia_max == doctest::Approx(fb.dia_max).epsilon(1e-12));
    CHECK(fa.area == doctest::Approx(fb.area).epsilon(1e-12));
    CHECK(std::abs(fr.dia_max - fa.dia_max) < 0.01 * fa.dia_max);
}

TEST_CASE("keep sums the largest components") {
    BinaryMask m = rect_mask(40, 20, 1, 1, 10, 10);
    const ShapeFeatures one = image_features(m, 36, 1, 0.0);
    const ShapeFeatures comp = component_features(m, connected_components(m).front(), 36);
    CHECK(one.dia_max == comp.dia_max);
    CHECK(image_features(m, 36, 3, 0.0).area == one.area);
    for (int y = 2; y < 6; ++y) {
        for (int x = 20; x < 24; ++x) m.set(x, y);
    }
    const ShapeFeatures both = image_features(m, 36, 2, 0.0);
    const ShapeFeatures small = component_features(m, connected_components(m)[1], 36);
    CHECK(both.area == doctest::Approx(one.area + small.area));
    CHECK(both.dia_max == doctest::Approx(one.dia_max + small.dia_max));
}

TEST_CASE("relative differences") {
    ShapeFeatures orig;
    orig.gdia = 100.0;
    orig.dia_max = 80.0;
    orig.dia_mean = 60.0;
    orig.area = 1000.0;
    const RdVector zero = relative_difference(orig, orig);
    for (double v : zero.values()) CHECK(v == 0.0);

    ShapeFeatures approx = orig;
    approx.gdia = 93.1;
    const double rd = relative_difference(approx, orig).gdia;
    CHECK(rd == doctest::Approx(-0.069));
    CHECK(rd == doctest::Approx(93.1 / 100.0 - 1.0));

    ShapeFeatures mask = orig;
    mask.gdia.reset();
    CHECK(relative_difference(approx, mask).gdia == doctest::Approx((93.1 - 80.0) / 80.0));

    ShapeFeatures degenerate = orig;
    degenerate.area = 0.0;
    CHECK(kind_of([&] { relative_difference(approx, degenerate); }) == ErrorKind::DegenerateInput);
}

TEST_CASE("rd difference on the car columns") {
    const RdVector d = rd_difference(kCarRect, kCarCurv);
    const std::array<double, 4> expected = {-0.120, -0.120, -0.064, 0.010};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(d.values()[i] - expected[i]) <= 0.0005);
    for (double v : rd_difference(kCarRect, kCarRect).values()) CHECK(v == 0.0);
    const RdVector back = rd_difference(kCarCurv, kCarRect);
    for (int i = 0; i < 4; ++i) CHECK(back.values()[i] == -d.values()[i]);
}

TEST_CASE("rd p-norm") {
    CHECK(std::abs(rd_pnorm(kCarRect, kCarCurv, 2.0) - 0.182) <= 0.0005);
    CHECK(std::abs(rd_pnorm(kCarRect, kCarCurv, std::numeric_limits<double>::infinity()) - 0.120) <= 1e-12);
    for (double p : {1.0, 2.0, 3.5}) CHECK(rd_pnorm(kCarRect, kCarRect, p) == 0.0);
    CHECK_THROWS_AS(rd_pnorm(kCarRect, kCarCurv, 0.5), Error);
    CHECK_THROWS_AS(rd_pnorm(kCarRect, kCarCurv, std::nan("")), Error);
}

TEST_CASE("rd p-norm satisfies the norm axioms") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto rand_rd = [&] { return RdVector{u(rng), u(rng), u(rng), u(rng)}; };
    for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const RdVector a = rand_rd(), b = rand_rd(), c = rand_rd();
            CHECK(rd_pnorm(a, b, p) >= 0.0);
            CHECK(rd_pnorm(a, a, p) == 0.0);
            CHECK(rd_pnorm(a, b, p) == doctest::Approx(rd_pnorm(b, a, p)).epsilon(1e-15));
            CHECK(rd_pnorm(a, c, p) <= rd_pnorm(a, b, p) + rd_pnorm(b, c, p) + 1e-12);
        }
    }
}

TEST_CASE("feature JSON") {
    ShapeFeatures f;
    f.dia_max = 2.0;
    CHECK(to_json(f)["gdia"].is_null());
    f.gdia = 3.0;
    CHECK(to_json(f)["gdia"] == 3.0);
    const auto j = to_json(kCarRect);
    CHECK(j["rd_ar"] == -0.423);
    CHECK(j.contains("rd_gdia"));
}
