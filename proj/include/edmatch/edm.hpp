#pragma once

#include <vector>

#include "edmatch/core.hpp"

namespace edmatch {

struct EdmConfig {
    int filter_count = 10;      // prefix of the default bank, in [1,10]
    double alpha = 1.0;         // style strength, clamped to [0,1]
    double eig_epsilon = 1e-8;  // relative eigenvalue truncation
};

/// Exact distribution matching: channel-wise exact histogram specification
/// followed by whitening/coloring against the style covariance, then the
/// alpha blend with the content. When step1 is non-null the intermediate
/// channel-wise matched map is copied out.
FeatureMap edm(const FeatureMap& content, const FeatureMap& style,
               const EdmConfig& cfg = {}, FeatureMap* step1 = nullptr);

/// alpha * stylized + (1 - alpha) * content. Endpoints are bit-exact
/// copies of the respective input.
FeatureMap strength(const FeatureMap& content, const FeatureMap& stylized,
                    double alpha);

/// Weighted sum of per-style edm outputs. Weights must be non-negative
/// and sum to 1 within 1e-6.
FeatureMap interpolate(const FeatureMap& content,
                       const std::vector<FeatureMap>& styles,
                       const std::vector<double>& weights,
                       const EdmConfig& cfg = {});

}  // namespace edmatch
