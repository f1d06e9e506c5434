#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "edmatch/core.hpp"

namespace testutil {

// Seeded uniform random map in [lo, hi).
inline edmatch::FeatureMap random_map(int c, int h, int w, std::uint64_t seed,
                                      float lo = -1.0f, float hi = 1.0f) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<float> dist(lo, hi);
    std::vector<float> data(static_cast<std::size_t>(c) * h * w);
    for (float& v : data) v = dist(gen);
    return edmatch::FeatureMap(c, h, w, std::move(data));
}

// Smooth low-frequency field quantized to 8-bit levels; a stand-in for
// natural image channels, with realistic value collisions.
inline edmatch::FeatureMap image_like_map(int c, int h, int w, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> amp(0.0, 1.0);
    std::vector<float> data(static_cast<std::size_t>(c) * h * w);
    for (int ch = 0; ch < c; ++ch) {
        const double fx = 1.0 + 6.0 * amp(gen);
        const double fy = 1.0 + 6.0 * amp(gen);
        const double px = 6.2831853 * amp(gen);
        const double py = 6.2831853 * amp(gen);
        const double gain = 60.0 + 60.0 * amp(gen);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const double v = 128.0 + gain * std::sin(fx * x / w * 6.2831853 + px) *
                                             std::cos(fy * y / h * 6.2831853 + py);
                const double q = std::round(std::min(std::max(v, 0.0), 255.0));
                data[(static_cast<std::size_t>(ch) * h + y) * w + x] =
                    static_cast<float>(q);
            }
        }
    }
    return edmatch::FeatureMap(c, h, w, std::move(data));
}

inline std::vector<float> sorted_copy(const float* p, int n) {
    std::vector<float> v(p, p + n);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace testutil
