#pragma once

#include <vector>

#include "edmatch/core.hpp"

namespace edmatch {

/// Square averaging mask with odd side length (1, 3, 5 or 7).
struct Kernel {
    int size = 1;
    std::vector<double> weights;  // size*size, row-major, sums to 1
};

/// Ordered bank of neighborhood filters. Index 0 has the highest sort
/// priority and must be the 1x1 identity.
struct FilterBank {
    std::vector<Kernel> kernels;

    int count() const { return static_cast<int>(kernels.size()); }
    void validate() const;  // throws std::invalid_argument on violation
};

/// First k filters of the built-in 10-filter bank (identity, then
/// averaging masks of growing support up to 7x7).
FilterBank default_bank(int k);

/// Filter responses, filter-major: plane(k, c) is an H x W float plane.
struct ResponseStack {
    int filters = 0;
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<float> data;

    const float* plane(int k, int c) const {
        return data.data() +
               (static_cast<std::size_t>(k) * channels + c) * height * width;
    }
    float* plane(int k, int c) {
        return data.data() +
               (static_cast<std::size_t>(k) * channels + c) * height * width;
    }
};

/// Correlates every channel with every kernel. Same-size output, mirror
/// (edge-non-repeating) padding at boundaries. Plane 0 is a verbatim copy
/// of the input when kernel 0 is the identity.
ResponseStack apply(const FilterBank& bank, const FeatureMap& f);

}  // namespace edmatch
