#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace edmatch {

/// C-channel spatial grid, channel-major then row-major, float32 values.
/// Treated throughout as H*W samples of a C-dimensional random variable.
class FeatureMap {
public:
    FeatureMap() = default;
    FeatureMap(int channels, int height, int width);
    FeatureMap(int channels, int height, int width, std::vector<float> data);

    int channels() const { return channels_; }
    int height() const { return height_; }
    int width() const { return width_; }
    int spatial_size() const { return height_ * width_; }
    std::size_t size() const { return data_.size(); }

    float* channel(int c);
    const float* channel(int c) const;

    float& at(int c, int y, int x) {
        return data_[(static_cast<std::size_t>(c) * height_ + y) * width_ + x];
    }
    float at(int c, int y, int x) const {
        return data_[(static_cast<std::size_t>(c) * height_ + y) * width_ + x];
    }

    std::vector<float>& data() { return data_; }
    const std::vector<float>& data() const { return data_; }

    bool same_shape(const FeatureMap& other) const {
        return channels_ == other.channels_ && height_ == other.height_ &&
               width_ == other.width_;
    }

private:
    int channels_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

/// Small dense row-major double matrix. Used for covariances and the
/// whitening/coloring kernels; feature data itself stays float32.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }

    double frobenius_norm() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

struct ChannelStats {
    std::vector<double> mean;  // length C
    std::vector<double> std;   // length C, population (divide by N)
};

/// Per-channel population mean and standard deviation.
ChannelStats channel_stats(const FeatureMap& f);

/// Population covariance of the C x (H*W) sample matrix. With
/// assume_centered the mean subtraction is skipped (second moment).
Matrix covariance(const FeatureMap& f, bool assume_centered = false);

/// Row-major copy of channel c. Throws on out-of-range index.
std::vector<float> flatten_channel(const FeatureMap& f, int c);

}  // namespace edmatch
