#include "trishape/corners.hpp"

#include <algorithm>

#include "trishape/error.hpp"

namespace trishape {

std::vector<Point2> detect_sites(const GrayImage& image, int max_sites, const CornerOptions& options) {
    const int w = image.width, h = image.height;
    if (w < 3 || h < 3) fail(ErrorKind::DegenerateInput, "corner detection needs an image of at least 3x3");
    if (max_sites < 1) fail(ErrorKind::InvalidArgument, "max_sites must be >= 1");

    const auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
    std::vector<double> gx(image.pixels.size(), 0.0), gy(image.pixels.size(), 0.0);
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            gx[idx(x, y)] = (double(image.at(x + 1, y)) - image.at(x - 1, y)) / 2.0;
            gy[idx(x, y)] = (double(image.at(x, y + 1)) - image.at(x, y - 1)) / 2.0;
        }
    }

    std::vector<double> response(image.pixels.size(), 0.0);
    double strongest = 0.0;
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            double sxx = 0.0, syy = 0.0, sxy = 0.0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const std::size_t q = idx(x + dx, y + dy);
                    sxx += gx[q] * gx[q];
                    syy += gy[q] * gy[q];
                    sxy += gx[q] * gy[q];
                }
            }
            const double trace = sxx + syy;
            const double r = sxx * syy - sxy * sxy - options.k * trace * trace;
            response[idx(x, y)] = r;
            strongest = std::max(strongest, r);
        }
    }
    if (!(strongest > 0.0)) fail(ErrorKind::DegenerateInput, "no corner response above threshold");

    const double threshold = options.relative_threshold * strongest;
    std::vector<std::size_t> peaks;
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            const std::size_t p = idx(x, y);
            const double r = response[p];
            if (r <= threshold) continue;
            bool is_peak = true;
            for (int dy = -1; dy <= 1 && is_peak; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const std::size_t q = idx(x + dx, y + dy);
                    // Plateaus keep their first pixel in raster order.
                    if (response[q] > r || (response[q] == r && q < p)) {
                        is_peak = false;
                        break;
                    }
                }
            }
            if (is_peak) peaks.push_back(p);
        }
    }
    if (peaks.empty()) fail(ErrorKind::DegenerateInput, "no corner response above threshold");

    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t a, std::size_t b) { return response[a] > response[b]; });
    if (peaks.size() > static_cast<std::size_t>(max_sites)) peaks.resize(max_sites);
    std::vector<Point2> sites;
    sites.reserve(peaks.size());
    for (std::size_t p : peaks) sites.push_back({static_cast<double>(p % w), static_cast<double>(p / w)});
    return sites;
}

}  // namespace trishape
