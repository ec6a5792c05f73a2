#include <doctest.h>

#include <filesystem>
#include <random>

#include "fixtures.hpp"
#include "trishape/corners.hpp"
#include "trishape/error.hpp"
#include "trishape/image.hpp"
#include "trishape/sites_io.hpp"

using namespace trishape;

namespace {

std::string error_text(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected an error");
    return {};
}

}  // namespace

TEST_CASE("ascii PGM") {
    const GrayImage img = parse_pgm("P2 2 2 255 0 128 255 64");
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 128, 255, 64});
    const GrayImage commented = parse_pgm("P2\n# a comment\n2 1\n# another\n9\n3 9\n");
    CHECK(commented.pixels == std::vector<std::uint8_t>{3, 9});
}

TEST_CASE("binary PGM") {
    const std::string bytes = std::string("P5\n2 2\n255\n") + std::string("\x00\x10\x80\xff", 4);
    const GrayImage img = parse_pgm(bytes);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 16, 128, 255});
    CHECK(parse_pgm(encode_pgm(img)).pixels == img.pixels);
}

TEST_CASE("malformed PGM reports byte offsets") {
    const std::string truncated = std::string("P5\n2 2\n255\n") + std::string("\x00\x10", 2);
    const std::string msg = error_text([&] { parse_pgm(truncated); });
    CHECK(msg.find("ParseError") != std::string::npos);
    CHECK(msg.find("missing 2 bytes") != std::string::npos);
    CHECK(msg.find("byte offset") != std::string::npos);
    CHECK(error_text([] { parse_pgm("P6 1 1 255 0"); }).find("byte offset 0") != std::string::npos);
    CHECK(error_text([] { parse_pgm("P2 2 2 300 0 0 0 0"); }).find("ParseError") != std::string::npos);
    CHECK(error_text([] { parse_pgm("P2 2 2 255 0 0 0"); }).find("ParseError") != std::string::npos);
    CHECK(error_text([] { parse_pgm("P2 0 2 255"); }).find("ParseError") != std::string::npos);
    CHECK(error_text([] { load_pgm("/nonexistent/file.pgm"); }).find("IoError") != std::string::npos);
}

TEST_CASE("mask from image keeps nonzero pixels") {
    const BinaryMask m = mask_from_image(parse_pgm("P2 3 1 255 0 1 255"));
    CHECK_FALSE(m.at(0, 0));
    CHECK(m.at(1, 0));
    CHECK(m.at(2, 0));
    CHECK(m.count() == 2);
}

TEST_CASE("corner detection") {
    CHECK_THROWS_AS(detect_sites(GrayImage(20, 20, 100), 10), Error);
    CHECK_THROWS_AS(detect_sites(GrayImage(2, 2, 0), 10), Error);

    GrayImage img(40, 40, 0);
    for (int y = 10; y < 30; ++y) {
        for (int x = 12; x < 28; ++x) img.at(x, y) = 255;
    }
    const auto sites = detect_sites(img, 4);
    REQUIRE(sites.size() == 4);
    const std::vector<Point2> corners = {{11.5, 9.5}, {27.5, 9.5}, {11.5, 29.5}, {27.5, 29.5}};
    for (const Point2& c : corners) {
        double best = 1e9;
        for (const Point2& s : sites) best = std::min(best, distance(s, c));
        CHECK(best <= 2.0);
    }
    CHECK(detect_sites(img, 3).size() == 3);
    CHECK(detect_sites(img, 4) == sites);
}

TEST_CASE("sites round-trip through CSV") {
    std::mt19937_64 rng(61);
    const auto sites = fixture::random_sites(rng, 40);
    const auto back = parse_sites_csv(sites_to_csv(sites));
    CHECK(back == sites);
    CHECK(delaunay_triangulate(back).faces() == delaunay_triangulate(sites).faces());

    const auto path = std::filesystem::temp_directory_path() / "trishape_sites_roundtrip.csv";
    save_text(path, sites_to_csv(sites));
    CHECK(load_sites(path) == sites);
    std::filesystem::remove(path);
}

TEST_CASE("sites parsing") {
    CHECK(parse_sites_csv("1,2\n3.5, 4\n# c\n\n") == std::vector<Point2>{{1, 2}, {3.5, 4}});
    CHECK(parse_sites_csv("x,y\n1,2\n").size() == 1);
    CHECK_THROWS_AS(parse_sites_csv("x,y\n1,2\nfoo,3\n"), Error);
    CHECK(parse_sites_json("[[0,0],[1,2.5]]") == std::vector<Point2>{{0, 0}, {1, 2.5}});
    CHECK_THROWS_AS(parse_sites_json("[[0,0],[1]]"), Error);
    CHECK_THROWS_AS(parse_sites_json("{"), Error);
}
