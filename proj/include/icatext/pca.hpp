#pragma once

#include "icatext/types.hpp"

#include <cmath>
#include <string>

namespace icatext {

template <class Scalar>
struct CenteringStats {
    Vec<Scalar> mean;  // per-feature mean over training columns
};

// Top-N principal subspace of the training covariance. Rows of `f` are
// orthonormal eigenvectors, eigenvalues sorted descending. Each row's
// largest-magnitude entry is made positive so results are reproducible
// across runs and platforms.
template <class Scalar>
struct PcaProjector {
    Mat<Scalar> f;            // N x d
    Vec<Scalar> eigenvalues;  // length N, non-increasing
    Index order() const { return f.rows(); }
};

template <class Derived>
CenteringStats<typename Derived::Scalar> fit_center(
    const Eigen::MatrixBase<Derived>& x) {
    if (x.cols() < 2)
        throw TooFewSamples("fit_center needs at least 2 columns, got " +
                            std::to_string(x.cols()));
    return {x.rowwise().mean()};
}

namespace detail {

template <class Scalar>
void fix_eigenvector_signs(Mat<Scalar>& f) {
    for (Index i = 0; i < f.rows(); ++i) {
        Index arg = 0;
        f.row(i).cwiseAbs().maxCoeff(&arg);
        if (f(i, arg) < Scalar(0)) f.row(i) = -f.row(i);
    }
}

}  // namespace detail

// Eigendecomposition of (1/(V-1)) Xc Xc^T, via the V x V Gram matrix when
// V < d so the large dimension is never decomposed directly.
template <class Derived>
PcaProjector<typename Derived::Scalar> fit_pca(
    const Eigen::MatrixBase<Derived>& xc, Index order) {
    using Scalar = typename Derived::Scalar;
    const Index d = xc.rows();
    const Index v = xc.cols();
    if (v < 2) throw TooFewSamples("fit_pca needs at least 2 columns");
    const Index rank_bound = std::min(d, v - 1);
    if (order < 1 || order > rank_bound)
        throw OrderTooLarge("order " + std::to_string(order) +
                            " outside [1, " + std::to_string(rank_bound) + "]");
    const Scalar worst_row_mean =
        xc.rowwise().mean().cwiseAbs().maxCoeff();
    if (worst_row_mean >= Scalar(1e-10))
        throw NotCentered("row mean magnitude " + std::to_string(worst_row_mean));

    PcaProjector<Scalar> proj;
    proj.f.resize(order, d);
    proj.eigenvalues.resize(order);
    const Scalar denom = Scalar(v - 1);

    if (d <= v) {
        Mat<Scalar> cov = (xc * xc.transpose()) / denom;
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(cov);
        if (es.info() != Eigen::Success)
            throw NumericError("eigendecomposition failed in fit_pca");
        for (Index k = 0; k < order; ++k) {
            const Index src = d - 1 - k;  // ascending -> descending
            proj.eigenvalues[k] = std::max(es.eigenvalues()[src], Scalar(0));
            proj.f.row(k) = es.eigenvectors().col(src).transpose();
        }
    } else {
        Mat<Scalar> gram = xc.transpose() * xc;  // V x V
        Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(gram);
        if (es.info() != Eigen::Success)
            throw NumericError("eigendecomposition failed in fit_pca");
        const Scalar largest = std::max(es.eigenvalues()[v - 1], Scalar(0));
        for (Index k = 0; k < order; ++k) {
            const Index src = v - 1 - k;
            const Scalar sigma = es.eigenvalues()[src];
            if (sigma <= largest * Scalar(1e-12))
                throw OrderTooLarge("order " + std::to_string(order) +
                                    " exceeds the effective rank of the data");
            proj.eigenvalues[k] = sigma / denom;
            proj.f.row(k) =
                (xc * es.eigenvectors().col(src)).transpose() / std::sqrt(sigma);
        }
    }
    detail::fix_eigenvector_signs(proj.f);
    return proj;
}

// f * (X - mean 1^T), using the stored (training) mean.
template <class Scalar, class Derived>
Mat<Scalar> project(const CenteringStats<Scalar>& stats,
                    const PcaProjector<Scalar>& proj,
                    const Eigen::MatrixBase<Derived>& x) {
    if (x.rows() != stats.mean.size() || x.rows() != proj.f.cols())
        throw DimensionMismatch("project: X has " + std::to_string(x.rows()) +
                                " rows, expected " +
                                std::to_string(stats.mean.size()));
    return proj.f * (x.colwise() - stats.mean);
}

}  // namespace icatext
