#include "edmatch/color_space.hpp"

#include <cmath>
#include <stdexcept>

namespace edmatch {

namespace {

// D65 reference white
constexpr double kXn = 0.95047;
constexpr double kYn = 1.0;
constexpr double kZn = 1.08883;

constexpr double kDelta = 6.0 / 29.0;

double srgb_to_linear(double v) {
    return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double v) {
    // extended to negative (out-of-gamut) values by odd symmetry
    if (v < 0.0) return -linear_to_srgb(-v);
    return v <= 0.0031308 ? v * 12.92 : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    return t > kDelta * kDelta * kDelta ? std::cbrt(t)
                                        : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

double lab_f_inv(double t) {
    return t > kDelta ? t * t * t : 3.0 * kDelta * kDelta * (t - 4.0 / 29.0);
}

void require_rgb(const FeatureMap& f, const char* who) {
    if (f.channels() != 3) {
        throw std::invalid_argument(std::string(who) + ": expected a 3-channel map");
    }
}

}  // namespace

FeatureMap rgb_to_lab(const FeatureMap& rgb) {
    require_rgb(rgb, "rgb_to_lab");
    const int n = rgb.spatial_size();
    FeatureMap lab(3, rgb.height(), rgb.width());
    const float* r = rgb.channel(0);
    const float* g = rgb.channel(1);
    const float* b = rgb.channel(2);
    float* pl = lab.channel(0);
    float* pa = lab.channel(1);
    float* pb = lab.channel(2);
    for (int i = 0; i < n; ++i) {
        const double rl = srgb_to_linear(r[i] / 255.0);
        const double gl = srgb_to_linear(g[i] / 255.0);
        const double bl = srgb_to_linear(b[i] / 255.0);
        const double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
        const double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
        const double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
        const double fx = lab_f(x / kXn);
        const double fy = lab_f(y / kYn);
        const double fz = lab_f(z / kZn);
        pl[i] = static_cast<float>(116.0 * fy - 16.0);
        pa[i] = static_cast<float>(500.0 * (fx - fy));
        pb[i] = static_cast<float>(200.0 * (fy - fz));
    }
    return lab;
}

FeatureMap lab_to_rgb(const FeatureMap& lab) {
    require_rgb(lab, "lab_to_rgb");
    const int n = lab.spatial_size();
    FeatureMap rgb(3, lab.height(), lab.width());
    const float* pl = lab.channel(0);
    const float* pa = lab.channel(1);
    const float* pb = lab.channel(2);
    float* r = rgb.channel(0);
    float* g = rgb.channel(1);
    float* b = rgb.channel(2);
    for (int i = 0; i < n; ++i) {
        const double fy = (pl[i] + 16.0) / 116.0;
        const double fx = fy + pa[i] / 500.0;
        const double fz = fy - pb[i] / 200.0;
        const double x = kXn * lab_f_inv(fx);
        const double y = kYn * lab_f_inv(fy);
        const double z = kZn * lab_f_inv(fz);
        const double rl = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
        const double gl = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
        const double bl = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;
        r[i] = static_cast<float>(255.0 * linear_to_srgb(rl));
        g[i] = static_cast<float>(255.0 * linear_to_srgb(gl));
        b[i] = static_cast<float>(255.0 * linear_to_srgb(bl));
    }
    return rgb;
}

}  // namespace edmatch
