#include "edmatch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "edmatch/ehs.hpp"
#include "edmatch/parallel.hpp"

namespace edmatch {

namespace {

void require_channels(const FeatureMap& a, const FeatureMap& b, const char* who) {
    if (a.channels() != b.channels()) {
        throw std::invalid_argument(std::string(who) + ": channel counts differ");
    }
}

void joint_range(const float* pa, int na, const float* pb, int nb,
                 double& lo, double& hi) {
    lo = pa[0];
    hi = pa[0];
    for (int i = 0; i < na; ++i) {
        lo = std::min(lo, static_cast<double>(pa[i]));
        hi = std::max(hi, static_cast<double>(pa[i]));
    }
    for (int i = 0; i < nb; ++i) {
        lo = std::min(lo, static_cast<double>(pb[i]));
        hi = std::max(hi, static_cast<double>(pb[i]));
    }
}

// Standard normals from mt19937_64 via Box-Muller; the std distributions
// are implementation-defined, this stream is not.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

double content_l2(const FeatureMap& a, const FeatureMap& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("content_l2: shapes differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(a.data()[i]) - b.data()[i];
        acc += d * d;
    }
    return acc / a.size();
}

double gram_loss(const FeatureMap& a, const FeatureMap& b) {
    require_channels(a, b, "gram_loss");
    const int c = a.channels();
    const Matrix ga = covariance(a, /*assume_centered=*/true);
    const Matrix gb = covariance(b, /*assume_centered=*/true);
    double acc = 0.0;
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
            const double d = ga(i, j) - gb(i, j);
            acc += d * d;
        }
    }
    return acc / (static_cast<double>(c) * c);
}

double mean_std_loss(const FeatureMap& a, const FeatureMap& b) {
    require_channels(a, b, "mean_std_loss");
    const ChannelStats sa = channel_stats(a);
    const ChannelStats sb = channel_stats(b);
    double acc = 0.0;
    for (int c = 0; c < a.channels(); ++c) {
        const double dm = sa.mean[c] - sb.mean[c];
        const double ds = sa.std[c] - sb.std[c];
        acc += dm * dm + ds * ds;
    }
    return acc / a.channels();
}

double histogram_l2(const FeatureMap& a, const FeatureMap& b, int bins) {
    require_channels(a, b, "histogram_l2");
    if (bins < 1) throw std::invalid_argument("histogram_l2: bins must be positive");
    const int na = a.spatial_size();
    const int nb = b.spatial_size();
    double total = 0.0;
    for (int c = 0; c < a.channels(); ++c) {
        const float* pa = a.channel(c);
        const float* pb = b.channel(c);
        double lo, hi;
        joint_range(pa, na, pb, nb, lo, hi);
        std::vector<double> wa(bins, 0.0), wb(bins, 0.0);
        const double span = hi - lo;
        auto bin_of = [&](float v) {
            if (span == 0.0) return 0;
            int idx = static_cast<int>((v - lo) / span * bins);
            return std::clamp(idx, 0, bins - 1);
        };
        for (int i = 0; i < na; ++i) wa[bin_of(pa[i])] += 1.0 / na;
        for (int i = 0; i < nb; ++i) wb[bin_of(pb[i])] += 1.0 / nb;
        double acc = 0.0;
        for (int i = 0; i < bins; ++i) {
            const double d = wa[i] - wb[i];
            acc += d * d;
        }
        total += std::sqrt(acc);
    }
    return total / a.channels();
}

double cmd(const FeatureMap& a, const FeatureMap& b, int order) {
    require_channels(a, b, "cmd");
    if (order < 1) throw std::invalid_argument("cmd: order must be at least 1");
    const int c = a.channels();
    const int na = a.spatial_size();
    const int nb = b.spatial_size();

    // Per channel: mean difference plus central moments 2..order, on
    // values rescaled to [0,1] by the joint range.
    std::vector<double> mean_diff(c, 0.0);
    std::vector<std::vector<double>> moment_diff(order + 1, std::vector<double>(c, 0.0));
    for (int ch = 0; ch < c; ++ch) {
        const float* pa = a.channel(ch);
        const float* pb = b.channel(ch);
        double lo, hi;
        joint_range(pa, na, pb, nb, lo, hi);
        const double span = hi - lo;
        if (span == 0.0) continue;  // both constant at the same value

        auto moments = [&](const float* p, int n, std::vector<double>& m) {
            double mu = 0.0;
            for (int i = 0; i < n; ++i) mu += (p[i] - lo) / span;
            mu /= n;
            m.assign(order + 1, 0.0);
            m[1] = mu;
            for (int i = 0; i < n; ++i) {
                const double d = (p[i] - lo) / span - mu;
                double pw = d;
                for (int k = 2; k <= order; ++k) {
                    pw *= d;
                    m[k] += pw;
                }
            }
            for (int k = 2; k <= order; ++k) m[k] /= n;
        };
        std::vector<double> ma, mb;
        moments(pa, na, ma);
        moments(pb, nb, mb);
        mean_diff[ch] = ma[1] - mb[1];
        for (int k = 2; k <= order; ++k) moment_diff[k][ch] = ma[k] - mb[k];
    }

    auto l2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    double total = l2(mean_diff);
    for (int k = 2; k <= order; ++k) total += l2(moment_diff[k]);
    return total;
}

double sw1d(std::span<const float> x, std::span<const float> y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("sw1d: empty input");
    std::vector<float> sx(x.begin(), x.end());
    std::vector<float> sy(y.begin(), y.end());
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx.size() != sy.size()) {
        if (sx.size() > sy.size()) {
            sx = quantile_resample(sx, static_cast<int>(sy.size()));
        } else {
            sy = quantile_resample(sy, static_cast<int>(sx.size()));
        }
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < sx.size(); ++i) {
        const double d = static_cast<double>(sx[i]) - sy[i];
        acc += d * d;
    }
    return acc / sx.size();
}

std::vector<std::vector<double>> swd_directions(int channels, int directions,
                                                std::uint64_t seed) {
    if (channels < 1 || directions < 1) {
        throw std::invalid_argument("swd_directions: counts must be positive");
    }
    NormalStream rng(seed);
    std::vector<std::vector<double>> dirs(directions, std::vector<double>(channels));
    for (auto& v : dirs) {
        double norm = 0.0;
        do {
            norm = 0.0;
            for (int c = 0; c < channels; ++c) {
                v[c] = rng.next();
                norm += v[c] * v[c];
            }
            norm = std::sqrt(norm);
        } while (norm == 0.0);
        for (int c = 0; c < channels; ++c) v[c] /= norm;
    }
    return dirs;
}

double swd(const FeatureMap& a, const FeatureMap& b, const SwdConfig& cfg) {
    require_channels(a, b, "swd");
    const int c = a.channels();
    const int m = cfg.directions > 0 ? cfg.directions : 4 * c;
    const auto dirs = swd_directions(c, m, cfg.seed);
    const int na = a.spatial_size();
    const int nb = b.spatial_size();

    std::vector<double> per_dir(m, 0.0);
    parallel_for(m, [&](int d) {
        const std::vector<double>& v = dirs[d];
        std::vector<float> pa(na, 0.0f), pb(nb, 0.0f);
        std::vector<double> acc_a(na, 0.0), acc_b(nb, 0.0);
        for (int ch = 0; ch < c; ++ch) {
            const float* qa = a.channel(ch);
            const float* qb = b.channel(ch);
            const double w = v[ch];
            for (int i = 0; i < na; ++i) acc_a[i] += w * qa[i];
            for (int i = 0; i < nb; ++i) acc_b[i] += w * qb[i];
        }
        for (int i = 0; i < na; ++i) pa[i] = static_cast<float>(acc_a[i]);
        for (int i = 0; i < nb; ++i) pb[i] = static_cast<float>(acc_b[i]);
        per_dir[d] = sw1d(pa, pb);
    });
    double total = 0.0;
    for (double x : per_dir) total += x;
    return total / m;
}

MetricReport compute_report(const FeatureMap& a, const FeatureMap& b,
                            const SwdConfig& swd_cfg, int bins, int cmd_order) {
    require_channels(a, b, "compute_report");
    MetricReport r;
    if (a.same_shape(b)) r.content = content_l2(a, b);
    r.gram = gram_loss(a, b);
    r.mean_std = mean_std_loss(a, b);
    r.histogram_l2 = histogram_l2(a, b, bins);
    r.cmd = cmd(a, b, cmd_order);
    r.swd = swd(a, b, swd_cfg);
    return r;
}

}  // namespace edmatch
