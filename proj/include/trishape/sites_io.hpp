#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trishape/geometry.hpp"

namespace trishape {

/// `x,y` per line; an optional non-numeric header line and '#' comments are skipped.
std::vector<Point2> parse_sites_csv(std::string_view text);

/// JSON array of [x, y] pairs.
std::vector<Point2> parse_sites_json(std::string_view text);

/// Dispatches on extension: `.json` is JSON, anything else CSV.
std::vector<Point2> load_sites(const std::filesystem::path& path);

/// Shortest round-trip decimal form, so reloading reproduces the exact doubles.
std::string sites_to_csv(std::span<const Point2> sites);

void save_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace trishape
