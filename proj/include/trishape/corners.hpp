#pragma once

#include <vector>

#include "trishape/geometry.hpp"
#include "trishape/image.hpp"

namespace trishape {

struct CornerOptions {
    double k = 0.04;                   // trace^2 weight in the Harris response
    double relative_threshold = 0.01;  // of the strongest response
};

/// Harris corners: structure tensor over a 3x3 window of central-difference gradients,
/// response det - k * trace^2, 3x3 non-maximum suppression. Returns at most `max_sites`
/// pixel positions ordered by response (descending) then raster index.
std::vector<Point2> detect_sites(const GrayImage& image, int max_sites, const CornerOptions& options = {});

}  // namespace trishape
