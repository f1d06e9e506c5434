#include "edmatch/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "edmatch/parallel.hpp"

namespace edmatch {

namespace {

// out = m * (f - sub) + add, per spatial sample, double arithmetic.
FeatureMap apply_affine(const Matrix& m, const FeatureMap& f,
                        const std::vector<double>& sub,
                        const std::vector<double>& add) {
    const int c = f.channels();
    const int n = f.spatial_size();
    FeatureMap out(c, f.height(), f.width());
    parallel_for(c, [&](int i) {
        float* dst = out.channel(i);
        std::vector<double> acc(n, add.empty() ? 0.0 : add[i]);
        for (int j = 0; j < c; ++j) {
            const double w = m(i, j);
            if (w == 0.0) continue;
            const float* src = f.channel(j);
            const double mu = sub.empty() ? 0.0 : sub[j];
            for (int k = 0; k < n; ++k) acc[k] += w * (src[k] - mu);
        }
        for (int k = 0; k < n; ++k) dst[k] = static_cast<float>(acc[k]);
    });
    return out;
}

// Kernel Q diag(lambda^power) Q^T over eigenvalues above the relative
// truncation threshold. Returns the number of retained eigenvalues.
int power_kernel(const SymEig& eig, double power, double eig_epsilon, Matrix& out) {
    const int c = eig.vectors.rows();
    out = Matrix(c, c);
    const double lmax = eig.values.empty() ? 0.0 : std::max(eig.values[0], 0.0);
    const double cutoff = eig_epsilon * lmax;
    int retained = 0;
    for (int e = 0; e < c; ++e) {
        const double lambda = eig.values[e];
        if (lambda <= cutoff || lambda <= 0.0) continue;
        ++retained;
        const double scale = std::pow(lambda, power);
        for (int i = 0; i < c; ++i) {
            const double qi = eig.vectors(i, e) * scale;
            for (int j = 0; j < c; ++j) {
                out(i, j) += qi * eig.vectors(j, e);
            }
        }
    }
    return retained;
}

}  // namespace

SymEig sym_eig(const Matrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("sym_eig: matrix is not square");

    double max_abs = 0.0;
    double max_asym = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(m(i, j)));
            max_asym = std::max(max_asym, std::abs(m(i, j) - m(j, i)));
        }
    }
    if (max_asym > 1e-6 * std::max(1.0, max_abs)) {
        throw std::invalid_argument("sym_eig: matrix is not symmetric within tolerance");
    }

    // Work on the symmetrized copy.
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
    }
    Matrix q = Matrix::identity(n);

    const double frob = a.frobenius_norm();
    const double stop = 1e-14 * std::max(1.0, frob);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
        }
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const double apq = a(p, r);
                if (apq == 0.0) continue;
                const double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, r);
                    a(k, p) = c * akp - s * akq;
                    a(k, r) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(r, k);
                    a(p, k) = c * apk - s * aqk;
                    a(r, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double qkp = q(k, p);
                    const double qkq = q(k, r);
                    q(k, p) = c * qkp - s * qkq;
                    q(k, r) = s * qkp + c * qkq;
                }
            }
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return a(i, i) > a(j, j); });

    SymEig eig;
    eig.values.resize(n);
    eig.vectors = Matrix(n, n);
    for (int e = 0; e < n; ++e) {
        eig.values[e] = a(idx[e], idx[e]);
        int pivot = 0;
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = std::abs(q(i, idx[e]));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        const double sign = q(pivot, idx[e]) < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) eig.vectors(i, e) = sign * q(i, idx[e]);
    }
    return eig;
}

FeatureMap adain(const FeatureMap& content, const FeatureMap& style) {
    if (content.channels() != style.channels()) {
        throw std::invalid_argument("adain: channel counts differ");
    }
    const ChannelStats cs = channel_stats(content);
    const ChannelStats ss = channel_stats(style);
    const int n = content.spatial_size();
    FeatureMap out(content.channels(), content.height(), content.width());
    parallel_for(content.channels(), [&](int c) {
        const float* src = content.channel(c);
        float* dst = out.channel(c);
        if (cs.std[c] == 0.0) {
            const float v = static_cast<float>(ss.mean[c]);
            std::fill(dst, dst + n, v);
            return;
        }
        const double scale = ss.std[c] / cs.std[c];
        for (int i = 0; i < n; ++i) {
            dst[i] = static_cast<float>(scale * (src[i] - cs.mean[c]) + ss.mean[c]);
        }
    });
    return out;
}

std::pair<FeatureMap, TransformKernels> whiten(const FeatureMap& f, double eig_epsilon) {
    const Matrix cov = covariance(f);
    const SymEig eig = sym_eig(cov);
    TransformKernels kernels;
    kernels.retained = power_kernel(eig, -0.5, eig_epsilon, kernels.whitening);
    kernels.source_mean = channel_stats(f).mean;
    FeatureMap white = apply_affine(kernels.whitening, f, kernels.source_mean, {});
    return {std::move(white), std::move(kernels)};
}

FeatureMap color(const FeatureMap& f_white, const FeatureMap& style,
                 double eig_epsilon, TransformKernels* kernels) {
    if (f_white.channels() != style.channels()) {
        throw std::invalid_argument("color: channel counts differ");
    }
    const Matrix cov = covariance(style);
    const SymEig eig = sym_eig(cov);
    Matrix coloring;
    const int retained = power_kernel(eig, 0.5, eig_epsilon, coloring);
    const std::vector<double> mu = channel_stats(style).mean;
    if (kernels) {
        kernels->coloring = coloring;
        kernels->target_mean = mu;
        kernels->retained = retained;
    }
    return apply_affine(coloring, f_white, {}, mu);
}

FeatureMap wct(const FeatureMap& content, const FeatureMap& style, double eig_epsilon) {
    if (content.channels() != style.channels()) {
        throw std::invalid_argument("wct: channel counts differ");
    }
    auto [white, kernels] = whiten(content, eig_epsilon);
    return color(white, style, eig_epsilon);
}

}  // namespace edmatch
