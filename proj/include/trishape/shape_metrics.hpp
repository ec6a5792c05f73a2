#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "trishape/geodesics.hpp"
#include "trishape/geometry.hpp"
#include "trishape/image.hpp"
#include "trishape/splines.hpp"

namespace trishape {

/// Geodesic shape features. Masks have no graph, so `gdia` is empty for them.
struct ShapeFeatures {
    std::optional<double> gdia;
    double dia_max = 0.0;
    double dia_mean = 0.0;
    double area = 0.0;
};

/// Relative differences (approx - orig) / orig per feature.
struct RdVector {
    double gdia = 0.0;
    double dmax = 0.0;
    double dmean = 0.0;
    double area = 0.0;

    std::array<double, 4> values() const { return {gdia, dmax, dmean, area}; }
    static RdVector from(std::array<double, 4> v) { return {v[0], v[1], v[2], v[3]}; }
};

struct VertexPartition {
    Point2 centroid;
    std::vector<int> above, below, left, right;  // indices into the input list
};

/// Splits vertices around their centroid with strict comparisons: y > c_y is above,
/// x > c_x is right; ties fall below / left.
VertexPartition boundary_vertex_partition(std::span<const Point2> vertices);

/// Sorted vertex ids touching a boundary edge.
std::vector<int> boundary_vertices(const Triangulation& t);

/// Features plus the realizing pair of the graph diameter (for rendering).
struct TriangulationFeatures {
    ShapeFeatures features;
    Diameter diameter;
    std::vector<int> diameter_path;
};

TriangulationFeatures triangulation_features(const Triangulation& t);
TriangulationFeatures triangulation_features(const CurvTriangulation& ct, int samples);

/// 8-connected foreground component; pixel ids are row-major indices, ascending.
struct Component {
    std::vector<int> pixels;
};

/// Components sorted by size (descending, then first pixel); those smaller than
/// `min_pixels` are dropped.
std::vector<Component> connected_components(const BinaryMask& mask, std::size_t min_pixels = 0);

inline constexpr int kDefaultOrientations = 36;
inline constexpr double kDefaultMinPixelFraction = 0.001;

/// Pixel-count threshold for a fraction of the whole raster.
std::size_t min_pixels_for(const BinaryMask& mask, double fraction);

/// Support widths at `orientations` equally spaced angles in [0, pi) over pixel centers,
/// plus one pixel of extent; area of the convex hull of pixel centers, or the pixel
/// count when the hull is degenerate.
ShapeFeatures component_features(const BinaryMask& mask, const Component& component, int orientations);

/// Sums component_features over the `keep` largest surviving components.
ShapeFeatures image_features(const BinaryMask& mask, int orientations = kDefaultOrientations, int keep = 1,
                             double min_pixel_fraction = kDefaultMinPixelFraction);

/// When orig has no gdia, its dia_max is the gdia reference.
RdVector relative_difference(const ShapeFeatures& approx, const ShapeFeatures& orig);

RdVector rd_difference(const RdVector& a, const RdVector& b);

/// p-norm of a - b; p may be +infinity.
double rd_pnorm(const RdVector& a, const RdVector& b, double p);

nlohmann::json to_json(const ShapeFeatures& f);
nlohmann::json to_json(const RdVector& rd);

}  // namespace trishape
