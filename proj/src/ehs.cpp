#include "edmatch/ehs.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "edmatch/parallel.hpp"

namespace edmatch {

namespace {

// Lexicographic comparison of the response tuples at flat indices a and b.
// Walks the planes lazily; most comparisons resolve on the raw value.
struct TupleLess {
    const ResponseStack& stack;
    int channel;
    int plane_stride;  // H*W

    bool operator()(int a, int b) const {
        for (int k = 0; k < stack.filters; ++k) {
            const float* p = stack.plane(k, channel);
            if (p[a] < p[b]) return true;
            if (p[a] > p[b]) return false;
        }
        return a < b;
    }

    bool tuple_equal(int a, int b) const {
        for (int k = 0; k < stack.filters; ++k) {
            const float* p = stack.plane(k, channel);
            if (p[a] != p[b]) return false;
        }
        return true;
    }
};

void sort_channel(const ResponseStack& stack, int c, std::vector<int>& order) {
    const int n = stack.height * stack.width;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), TupleLess{stack, c, n});
}

}  // namespace

SortResult lsort(const ResponseStack& stack) {
    const int n = stack.height * stack.width;
    SortResult result(stack.channels);
    parallel_for(stack.channels, [&](int c) {
        ChannelOrder& co = result[c];
        sort_channel(stack, c, co.order);
        co.sorted_values.resize(n);
        const float* raw = stack.plane(0, c);
        for (int i = 0; i < n; ++i) co.sorted_values[i] = raw[co.order[i]];
    });
    return result;
}

std::vector<float> quantile_resample(const std::vector<float>& sorted, int n) {
    const int m = static_cast<int>(sorted.size());
    if (m == 0 || n <= 0) throw std::invalid_argument("quantile_resample: empty input");
    if (n == m) return sorted;
    std::vector<float> out(n);
    if (n == 1) {
        const double p = (m - 1) / 2.0;
        const int lo = static_cast<int>(p);
        const double t = p - lo;
        out[0] = static_cast<float>((1.0 - t) * sorted[lo] + t * sorted[std::min(lo + 1, m - 1)]);
        return out;
    }
    for (int j = 0; j < n; ++j) {
        const double p = static_cast<double>(j) * (m - 1) / (n - 1);
        const int lo = static_cast<int>(p);
        const int hi = std::min(lo + 1, m - 1);
        const double t = p - lo;
        out[j] = static_cast<float>((1.0 - t) * sorted[lo] + t * sorted[hi]);
    }
    return out;
}

FeatureMap match_channelwise(const FeatureMap& content, const FeatureMap& style,
                             const FilterBank& bank) {
    if (content.channels() != style.channels()) {
        throw std::invalid_argument("match_channelwise: channel counts differ");
    }
    const ResponseStack stack = apply(bank, content);
    const int n = content.spatial_size();
    const int ns = style.spatial_size();
    FeatureMap out(content.channels(), content.height(), content.width());
    parallel_for(content.channels(), [&](int c) {
        std::vector<int> order;
        sort_channel(stack, c, order);

        std::vector<float> style_sorted = flatten_channel(style, c);
        std::sort(style_sorted.begin(), style_sorted.end());
        if (ns != n) style_sorted = quantile_resample(style_sorted, n);

        float* dst = out.channel(c);
        for (int i = 0; i < n; ++i) dst[order[i]] = style_sorted[i];
    });
    return out;
}

std::vector<double> collision_ratio(const FeatureMap& f, const FilterBank& bank) {
    const ResponseStack stack = apply(bank, f);
    const int n = f.spatial_size();
    std::vector<double> ratios(f.channels(), 0.0);
    parallel_for(f.channels(), [&](int c) {
        std::vector<int> order;
        sort_channel(stack, c, order);
        const TupleLess cmp{stack, c, n};
        int duplicated = 0;
        int run = 1;
        for (int i = 1; i <= n; ++i) {
            if (i < n && cmp.tuple_equal(order[i - 1], order[i])) {
                ++run;
            } else {
                if (run >= 2) duplicated += run;
                run = 1;
            }
        }
        ratios[c] = static_cast<double>(duplicated) / n;
    });
    return ratios;
}

double mean_collision_ratio(const FeatureMap& f, const FilterBank& bank) {
    const std::vector<double> r = collision_ratio(f, bank);
    double s = 0.0;
    for (double x : r) s += x;
    return s / r.size();
}

std::vector<CollisionEntry> collision_bench(const FeatureMap& f, int max_filters,
                                            int reps) {
    if (max_filters < 1 || max_filters > 10) {
        throw std::invalid_argument("collision_bench: max_filters must be in [1,10]");
    }
    reps = std::max(reps, 1);
    std::vector<CollisionEntry> entries;
    entries.reserve(max_filters);
    for (int k = 1; k <= max_filters; ++k) {
        const FilterBank bank = default_bank(k);
        const ResponseStack stack = apply(bank, f);
        std::vector<double> times(reps);
        for (int r = 0; r < reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            volatile auto result = lsort(stack).size();
            (void)result;
            const auto t1 = std::chrono::steady_clock::now();
            times[r] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        std::sort(times.begin(), times.end());
        CollisionEntry e;
        e.filters = k;
        e.ratio = mean_collision_ratio(f, bank);
        e.time_ms = times[reps / 2];
        entries.push_back(e);
    }
    return entries;
}

}  // namespace edmatch
