#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "plcwt/grid.hpp"

// Spoked-wheel test pattern shared by the asset generator and the
// acceptance checks. Eight full lines through the image center, one per
// orientation k pi / 8, drawn between radii [r_in, r_out] at width
// 2 * half_width, foreground 0.9 on background 0.1.
namespace wheelgen {

struct WheelPattern {
    static constexpr int kSize = 64;
    static constexpr int kOrientations = 8;
    static constexpr double kRadiusInner = 6.0;
    static constexpr double kRadiusOuter = 28.0;
    static constexpr double kHalfWidth = 1.5;
    static constexpr double kBackground = 0.1;
    static constexpr double kForeground = 0.9;

    plcwt::RealField2D image{plcwt::GridSpec{kSize, kSize, 1.0}};
    std::vector<std::uint8_t> mask;                // union of all spokes
    std::vector<std::vector<int>> spoke_pixels;    // flat indices per orientation
};

inline WheelPattern make_wheel() {
    WheelPattern w;
    const int n = WheelPattern::kSize;
    w.mask.assign(static_cast<std::size_t>(n) * n, 0);
    w.spoke_pixels.resize(WheelPattern::kOrientations);
    const double c = n / 2.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = i - c, y = j - c;
            double v = WheelPattern::kBackground;
            for (int k = 0; k < WheelPattern::kOrientations; ++k) {
                const double phi = plcwt::kPi * k / WheelPattern::kOrientations;
                const double along = x * std::cos(phi) + y * std::sin(phi);
                const double perp = -x * std::sin(phi) + y * std::cos(phi);
                if (std::abs(perp) <= WheelPattern::kHalfWidth &&
                    std::abs(along) >= WheelPattern::kRadiusInner &&
                    std::abs(along) <= WheelPattern::kRadiusOuter) {
                    v = WheelPattern::kForeground;
                    w.mask[i * n + j] = 1;
                    w.spoke_pixels[k].push_back(i * n + j);
                }
            }
            w.image.at(i, j) = v;
        }
    return w;
}

// Mask dilated by `radius` in the Chebyshev metric plus the hub disk;
// detections outside this set count as spurious.
inline std::vector<std::uint8_t> tolerance_region(const WheelPattern& w, int radius) {
    const int n = WheelPattern::kSize;
    std::vector<std::uint8_t> allowed(w.mask.size(), 0);
    const double c = n / 2.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::hypot(i - c, j - c) <= WheelPattern::kRadiusInner + radius)
                allowed[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!w.mask[i * n + j]) continue;
            for (int di = -radius; di <= radius; ++di)
                for (int dj = -radius; dj <= radius; ++dj) {
                    const int ii = i + di, jj = j + dj;
                    if (ii >= 0 && ii < n && jj >= 0 && jj < n) allowed[ii * n + jj] = 1;
                }
        }
    return allowed;
}

}  // namespace wheelgen
