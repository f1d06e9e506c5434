#pragma once

#include <utility>
#include <vector>

#include "edmatch/core.hpp"

namespace edmatch {

struct SymEig {
    std::vector<double> values;  // descending
    Matrix vectors;              // columns, orthonormal
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues descending; each eigenvector's largest-magnitude component
/// is made positive so kernels are reproducible. Throws if the input is
/// not symmetric within 1e-6 relative tolerance.
SymEig sym_eig(const Matrix& m);

struct TransformKernels {
    Matrix whitening;                 // C x C
    Matrix coloring;                  // C x C
    std::vector<double> source_mean;  // length C
    std::vector<double> target_mean;  // length C
    int retained = 0;                 // eigenvalues kept after truncation
};

/// Per-channel affine renormalization to the style's mean and std.
/// A constant content channel maps to the constant style mean.
FeatureMap adain(const FeatureMap& content, const FeatureMap& style);

/// Centers f and maps its covariance to identity on the retained
/// eigen-subspace (ZCA kernel Q diag(l^-1/2) Q^T, eigenvalues below
/// eig_epsilon * l_max truncated).
std::pair<FeatureMap, TransformKernels> whiten(const FeatureMap& f,
                                               double eig_epsilon = 1e-8);

/// Applies the style's coloring kernel Q diag(l^1/2) Q^T and adds the
/// style mean. When kernels is non-null the coloring kernel and target
/// mean are recorded there.
FeatureMap color(const FeatureMap& f_white, const FeatureMap& style,
                 double eig_epsilon = 1e-8, TransformKernels* kernels = nullptr);

/// Whitening followed by coloring: output covariance matches the style's.
FeatureMap wct(const FeatureMap& content, const FeatureMap& style,
               double eig_epsilon = 1e-8);

}  // namespace edmatch
