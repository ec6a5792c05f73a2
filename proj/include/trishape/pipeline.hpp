#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trishape/complexes.hpp"
#include "trishape/error.hpp"
#include "trishape/image.hpp"
#include "trishape/shape_metrics.hpp"
#include "trishape/splines.hpp"

namespace trishape {

struct PipelineConfig {
    std::optional<double> sigma;  // default_sigma of the triangulation when unset
    double bend = kDefaultBend;
    double mid_weight = kDefaultMidWeight;
    int edge_samples = kDefaultEdgeSamples;
    int orientations = kDefaultOrientations;
    int keep_components = 1;
    double min_pixels = kDefaultMinPixelFraction;
    double p_norm = 2.0;
    std::size_t chain_cap = kDefaultChainCap;
    int max_sites = 64;  // corner detection only

    /// Throws InvalidArgument naming the first out-of-range field.
    void validate() const;
};

/// Flat `key = value` lines; '#' starts a comment. Keys not present keep their value
/// from `base`; unknown keys and malformed values are ParseErrors.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});
std::string to_config_text(const PipelineConfig& cfg);

/// Accepts a number >= 1 or "inf".
double parse_p_norm(std::string_view text);

/// Runs `f`, labeling any unlabeled Error with `stage`.
template <class F>
decltype(auto) run_stage(std::string_view stage, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (!e.stage().empty()) throw;
        throw e.with_stage(std::string(stage));
    }
}

struct Approximation {
    Triangulation rect;
    SpokeDecomposition dec;
    CurvTriangulation curv;
};

/// Sites from a CSV/JSON file, or Harris corners of a PGM image when no file is given.
std::vector<Point2> acquire_sites(const std::optional<std::filesystem::path>& sites_path,
                                  const std::optional<std::filesystem::path>& image_path, const PipelineConfig& cfg);

Approximation build_approximation(std::span<const Point2> sites, const PipelineConfig& cfg);

nlohmann::json triangulate_report(const Approximation& approx, const PipelineConfig& cfg);

struct FeaturesReport {
    TriangulationFeatures rect;
    TriangulationFeatures curv;
    std::optional<ShapeFeatures> orig;
    nlohmann::json to_json() const;
};

FeaturesReport compute_features(const Approximation& approx, const BinaryMask* mask, const PipelineConfig& cfg);

struct CompareReport {
    FeaturesReport features;
    RdVector rd_rect;
    RdVector rd_curv;
    RdVector rd_diff;
    double p = 2.0;
    double pnorm = 0.0;
    nlohmann::json to_json() const;
};

CompareReport run_compare(const Approximation& approx, const BinaryMask& mask, const PipelineConfig& cfg);
CompareReport run_compare(std::span<const Point2> sites, const BinaryMask& mask, const PipelineConfig& cfg);

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace trishape
