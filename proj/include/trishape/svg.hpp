#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "trishape/complexes.hpp"
#include "trishape/geometry.hpp"
#include "trishape/splines.hpp"

namespace trishape {

struct SvgOptions {
    double width = 800.0;  // canvas width in px; height follows the aspect ratio
    double margin = 20.0;
    int curve_samples = kDefaultEdgeSamples;  // used only for non-quadratic curves
};

/// Fill colour for spoke level k: 1 yellow, 2 gray, then a fixed palette.
std::string level_color(int k);

/// Faces are `<polygon class="face">` (rectilinear) or `<path class="face">` (curvilinear),
/// edges `<line>`/`<path class="edge">`, the geodesic a `<polyline class="geodesic">`.
/// Pass `curv = nullptr` for the rectilinear drawing.
std::string render_svg(const Triangulation& t, const SpokeDecomposition& dec, const CurvTriangulation* curv,
                       std::span<const int> geodesic, const SvgOptions& options = {});

void render_svg(const Triangulation& t, const SpokeDecomposition& dec, const CurvTriangulation* curv,
                std::span<const int> geodesic, const std::filesystem::path& out, const SvgOptions& options = {});

}  // namespace trishape
