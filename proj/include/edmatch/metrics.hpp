#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edmatch/core.hpp"

namespace edmatch {

struct SwdConfig {
    int directions = 0;      // 0 means 4 * C
    std::uint64_t seed = 0;  // direction stream seed
};

/// Mean squared element-wise difference. Requires identical shapes.
double content_l2(const FeatureMap& a, const FeatureMap& b);

/// Squared Frobenius distance of the gram matrices G = F F^T / (H*W),
/// normalized by C^2.
double gram_loss(const FeatureMap& a, const FeatureMap& b);

/// Mean over channels of (mu_a - mu_b)^2 + (sigma_a - sigma_b)^2.
double mean_std_loss(const FeatureMap& a, const FeatureMap& b);

/// Mean over channels of the L2 distance between normalized histograms
/// binned over the joint per-channel value range.
double histogram_l2(const FeatureMap& a, const FeatureMap& b, int bins = 256);

/// Central moment discrepancy up to the given order, on values rescaled
/// per channel to [0,1] by the joint range of both inputs.
double cmd(const FeatureMap& a, const FeatureMap& b, int order = 5);

/// Squared 1-D Wasserstein-2 distance between empirical distributions:
/// mean of squared differences of the ascending-sorted sequences. Unequal
/// lengths are quantile-resampled to the shorter.
double sw1d(std::span<const float> x, std::span<const float> y);

/// The seeded unit direction sequence used by swd, one length-C vector
/// per direction. Fixed generator (mt19937_64 + Box-Muller), so streams
/// are reproducible across platforms.
std::vector<std::vector<double>> swd_directions(int channels, int directions,
                                                std::uint64_t seed);

/// Sliced Wasserstein distance: mean sw1d over the seeded random
/// projections of the two sample sets.
double swd(const FeatureMap& a, const FeatureMap& b, const SwdConfig& cfg = {});

struct MetricReport {
    std::optional<double> content;  // only when shapes are identical
    double gram = 0.0;
    double mean_std = 0.0;
    double histogram_l2 = 0.0;
    double cmd = 0.0;
    double swd = 0.0;
};

MetricReport compute_report(const FeatureMap& a, const FeatureMap& b,
                            const SwdConfig& swd_cfg = {}, int bins = 256,
                            int cmd_order = 5);

}  // namespace edmatch
