#include "edmatch/core.hpp"

#include <cmath>
#include <stdexcept>

#include "edmatch/parallel.hpp"

namespace edmatch {

namespace {

void check_dims(int channels, int height, int width) {
    if (channels <= 0 || height <= 0 || width <= 0) {
        throw std::invalid_argument("FeatureMap: dimensions must be positive");
    }
}

}  // namespace

FeatureMap::FeatureMap(int channels, int height, int width)
    : channels_(channels), height_(height), width_(width) {
    check_dims(channels, height, width);
    data_.assign(static_cast<std::size_t>(channels) * height * width, 0.0f);
}

FeatureMap::FeatureMap(int channels, int height, int width, std::vector<float> data)
    : channels_(channels), height_(height), width_(width), data_(std::move(data)) {
    check_dims(channels, height, width);
    const std::size_t expected = static_cast<std::size_t>(channels) * height * width;
    if (data_.size() != expected) {
        throw std::invalid_argument("FeatureMap: data length does not equal C*H*W");
    }
    for (float v : data_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("FeatureMap: non-finite value in data");
        }
    }
}

float* FeatureMap::channel(int c) {
    if (c < 0 || c >= channels_) throw std::out_of_range("FeatureMap: channel index out of range");
    return data_.data() + static_cast<std::size_t>(c) * spatial_size();
}

const float* FeatureMap::channel(int c) const {
    if (c < 0 || c >= channels_) throw std::out_of_range("FeatureMap: channel index out of range");
    return data_.data() + static_cast<std::size_t>(c) * spatial_size();
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : v_) s += x * x;
    return std::sqrt(s);
}

ChannelStats channel_stats(const FeatureMap& f) {
    const int c = f.channels();
    const int n = f.spatial_size();
    ChannelStats st;
    st.mean.resize(c);
    st.std.resize(c);
    for (int ch = 0; ch < c; ++ch) {
        const float* p = f.channel(ch);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += p[i];
        const double mu = sum / n;
        double var = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = p[i] - mu;
            var += d * d;
        }
        st.mean[ch] = mu;
        st.std[ch] = std::sqrt(var / n);
    }
    return st;
}

Matrix covariance(const FeatureMap& f, bool assume_centered) {
    const int c = f.channels();
    const int n = f.spatial_size();
    std::vector<double> mu(c, 0.0);
    if (!assume_centered) {
        for (int ch = 0; ch < c; ++ch) {
            const float* p = f.channel(ch);
            double sum = 0.0;
            for (int i = 0; i < n; ++i) sum += p[i];
            mu[ch] = sum / n;
        }
    }
    Matrix cov(c, c);
    parallel_for(c, [&](int i) {
        const float* pi = f.channel(i);
        for (int j = i; j < c; ++j) {
            const float* pj = f.channel(j);
            double acc = 0.0;
            for (int k = 0; k < n; ++k) {
                acc += (pi[k] - mu[i]) * (pj[k] - mu[j]);
            }
            cov(i, j) = acc / n;
        }
    });
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < i; ++j) cov(i, j) = cov(j, i);
    }
    return cov;
}

std::vector<float> flatten_channel(const FeatureMap& f, int c) {
    const float* p = f.channel(c);  // throws on bad index
    return std::vector<float>(p, p + f.spatial_size());
}

}  // namespace edmatch
