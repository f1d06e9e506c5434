#pragma once

#include <vector>

#include "edmatch/core.hpp"
#include "edmatch/filters.hpp"

namespace edmatch {

/// Per-channel result of the lexicographic sort: the channel's raw values
/// in ascending rank order and the permutation mapping rank -> flat
/// spatial index.
struct ChannelOrder {
    std::vector<float> sorted_values;
    std::vector<int> order;
};

using SortResult = std::vector<ChannelOrder>;

/// Ranks each channel's flat indices by the K-tuple of filter responses,
/// compared lexicographically (filter 0 first). Residual ties break by
/// ascending flat index, so the result is deterministic.
SortResult lsort(const ResponseStack& stack);

/// Channel-wise exact histogram specification: the i-th ranked content
/// position receives the i-th smallest style value. With equal sample
/// counts each output channel is exactly a permutation of the style
/// channel; otherwise the sorted style values are quantile-resampled.
FeatureMap match_channelwise(const FeatureMap& content, const FeatureMap& style,
                             const FilterBank& bank);

/// Per-channel fraction of samples whose full K-response tuple is shared
/// with at least one other sample of the channel.
std::vector<double> collision_ratio(const FeatureMap& f, const FilterBank& bank);

double mean_collision_ratio(const FeatureMap& f, const FilterBank& bank);

struct CollisionEntry {
    int filters = 0;
    double ratio = 0.0;   // mean over channels
    double time_ms = 0.0; // median lexicographic sort time over the repetitions
};

/// Collision ratio and sort timing for every prefix 1..max_filters of the
/// default bank; timing is the median of `reps` lsort runs.
std::vector<CollisionEntry> collision_bench(const FeatureMap& f, int max_filters,
                                            int reps = 5);

/// Linear interpolation of the empirical quantile function: resamples the
/// ascending `sorted` sequence to `n` values; identity when sizes match.
std::vector<float> quantile_resample(const std::vector<float>& sorted, int n);

}  // namespace edmatch
