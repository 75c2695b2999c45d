#pragma once

#include "icatext/entropy.hpp"
#include "icatext/types.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace icatext {

struct IcaConfig {
    std::uint64_t seed = 0;
    int max_iters = 500;
    double tol = 1e-6;        // stop when the projected gradient norm drops below
    double lambda = 0.0;      // sparsity weight; 0 selects the plain MI cost
    double smooth_eps = 1e-8; // l1 smoothing: s_eps(u) = sqrt(u^2 + eps)
    int restarts = 5;

    void validate() const {
        if (max_iters < 1) throw ConfigError("ica: max_iters must be >= 1");
        if (!(tol > 0)) throw ConfigError("ica: tol must be > 0");
        if (lambda < 0) throw ConfigError("ica: lambda must be >= 0");
        if (!(smooth_eps > 0)) throw ConfigError("ica: smooth_eps must be > 0");
        if (restarts < 1) throw ConfigError("ica: restarts must be >= 1");
    }
};

template <class Scalar>
struct IcaResult {
    Mat<Scalar> w;  // demixing matrix; applies to the input x_hat directly
    Mat<Scalar> y;  // w * x_hat
    std::vector<Scalar> cost_trace;  // initial cost, then every accepted step
    bool converged = false;
    int iters = 0;
    int best_restart = 0;
};

namespace detail {

template <class Scalar>
std::optional<Scalar> log_abs_det(const Mat<Scalar>& m) {
    Eigen::PartialPivLU<Mat<Scalar>> lu(m);
    Scalar acc = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        const Scalar u = std::abs(lu.matrixLU()(i, i));
        if (!(u > Scalar(0))) return std::nullopt;
        acc += std::log(u);
    }
    return acc;
}

// Cost (and optionally gradient) of
//   J(W) = sum_n H_hat(w_n x) - ln|det W| + lambda sum s_eps(Wx),
// the mutual-information cost with the mixture-entropy constant dropped.
// Returns nullopt when W is numerically singular.
template <class Scalar>
std::optional<Scalar> cost_impl(const Mat<Scalar>& w, const Mat<Scalar>& x,
                                const IcaConfig& cfg, Mat<Scalar>* grad) {
    const Index n = w.rows();
    Eigen::PartialPivLU<Mat<Scalar>> lu(w);
    Scalar logdet = 0;
    for (Index i = 0; i < n; ++i) {
        const Scalar u = std::abs(lu.matrixLU()(i, i));
        if (!(u > Scalar(0))) return std::nullopt;
        logdet += std::log(u);
    }
    const Mat<Scalar> y = w * x;
    Scalar cost = -logdet;
    if (grad) {
        grad->resize(n, n);
        *grad = -lu.inverse().transpose();
    }
    for (Index row = 0; row < n; ++row) {
        const Arr<Scalar> yr = y.row(row).transpose().array();
        const RowEntropy<Scalar> re = analyze_row(yr);
        cost += re.value;
        if (grad)
            grad->row(row) +=
                row_entropy_gradient(yr, re).matrix().transpose() * x.transpose();
    }
    if (cfg.lambda > 0) {
        const Mat<Scalar> s =
            (y.array().square() + Scalar(cfg.smooth_eps)).sqrt().matrix();
        cost += Scalar(cfg.lambda) * s.sum();
        if (grad)
            *grad += Scalar(cfg.lambda) *
                     (y.array() / s.array()).matrix() * x.transpose();
    }
    return cost;
}

template <class Scalar>
void check_cost_args(const Mat<Scalar>& w, const Mat<Scalar>& x) {
    if (w.rows() != w.cols())
        throw DimensionMismatch("demixing matrix must be square");
    if (w.cols() != x.rows())
        throw DimensionMismatch("demixing matrix is " + std::to_string(w.rows()) +
                                "x" + std::to_string(w.cols()) + " but data has " +
                                std::to_string(x.rows()) + " rows");
    if (x.cols() < 8)
        throw TooFewSamples("ica cost needs at least 8 samples per row");
    const auto ld = log_abs_det(w);
    if (!ld || *ld <= std::log(Scalar(1e-12)))
        throw SingularW("|det W| <= 1e-12");
}

// Draws independent of the standard library's distribution internals so
// streams are reproducible across standard libraries.
inline double box_muller(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

template <class Scalar>
Mat<Scalar> random_orthogonal(Index n, std::mt19937_64& rng) {
    Mat<Scalar> g(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) g(i, j) = Scalar(box_muller(rng));
    Eigen::HouseholderQR<Mat<Scalar>> qr(g);
    Mat<Scalar> q = qr.householderQ();
    const Mat<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j)
        if (r(j, j) < Scalar(0)) q.col(j) = -q.col(j);
    return q;
}

template <class Scalar>
void project_rows_tangent(const Mat<Scalar>& m, Mat<Scalar>& grad) {
    for (Index i = 0; i < m.rows(); ++i)
        grad.row(i) -= grad.row(i).dot(m.row(i)) * m.row(i);
}

template <class Scalar>
struct DescentOutcome {
    Mat<Scalar> m;
    Scalar cost = 0;
    std::vector<Scalar> trace;
    bool converged = false;
    int iters = 0;
};

// Projected gradient descent over unit-norm demixing rows with
// Barzilai-Borwein step seeding and Armijo backtracking. Row norms are a
// gauge freedom of the lambda=0 cost and pin the scale at which the
// sparsity penalty is measured when lambda > 0.
template <class Scalar>
DescentOutcome<Scalar> minimize_whitened(Mat<Scalar> m, const Mat<Scalar>& z,
                                         const IcaConfig& cfg) {
    DescentOutcome<Scalar> out;
    m.rowwise().normalize();
    Mat<Scalar> grad;
    std::optional<Scalar> cost = cost_impl(m, z, cfg, &grad);
    if (!cost) throw SingularW("singular initial demixing matrix");
    project_rows_tangent(m, grad);
    out.trace.push_back(*cost);

    Scalar eta = Scalar(0.1);
    Mat<Scalar> prev_m, prev_grad;
    bool have_prev = false;
    while (out.iters < cfg.max_iters) {
        const Scalar gnorm = grad.norm();
        if (gnorm < Scalar(cfg.tol)) {
            out.converged = true;
            break;
        }
        if (have_prev) {
            const Mat<Scalar> dm = m - prev_m;
            const Mat<Scalar> dg = grad - prev_grad;
            const Scalar denom = dm.cwiseProduct(dg).sum();
            eta = denom > Scalar(0)
                      ? dm.squaredNorm() / denom
                      : Scalar(0.1);
            eta = std::min(std::max(eta, Scalar(1e-7)), Scalar(50));
        }
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            Mat<Scalar> trial = m - eta * grad;
            trial.rowwise().normalize();
            Mat<Scalar> trial_grad;
            const auto trial_cost = cost_impl(trial, z, cfg, &trial_grad);
            if (trial_cost &&
                *trial_cost <= *cost - Scalar(1e-4) * eta * gnorm * gnorm) {
                prev_m = m;
                prev_grad = grad;
                have_prev = true;
                m = trial;
                cost = trial_cost;
                grad = trial_grad;
                project_rows_tangent(m, grad);
                out.trace.push_back(*cost);
                ++out.iters;
                accepted = true;
                break;
            }
            eta *= Scalar(0.5);
        }
        if (!accepted) break;  // stalled at numerical precision
    }
    out.m = std::move(m);
    out.cost = *cost;
    return out;
}

}  // namespace detail

// Evaluates the mutual-information cost
//   J(W) = sum_n H_hat(w_n^T x) - ln|det W| + lambda sum_nv s_eps((Wx)_nv).
template <class Scalar>
Scalar ica_cost(const Mat<Scalar>& w, const Mat<Scalar>& x_hat,
                const IcaConfig& config = {}) {
    config.validate();
    detail::check_cost_args(w, x_hat);
    return *detail::cost_impl(w, x_hat, config, nullptr);
}

// Analytic gradient of ica_cost with respect to w.
template <class Scalar>
Mat<Scalar> ica_gradient(const Mat<Scalar>& w, const Mat<Scalar>& x_hat,
                         const IcaConfig& config = {}) {
    config.validate();
    detail::check_cost_args(w, x_hat);
    Mat<Scalar> grad;
    detail::cost_impl(w, x_hat, config, &grad);
    return grad;
}

// Entropy-bound-minimization ICA: whitens internally, minimizes the MI
// cost from `restarts` random orthogonal initializations, keeps the
// lowest final cost (ties: lowest restart index), and returns W composed
// with the internal whitener so it applies to x_hat directly.
template <class Scalar>
IcaResult<Scalar> ica_ebm(const Mat<Scalar>& x_hat, const IcaConfig& config) {
    config.validate();
    const Index n = x_hat.rows();
    const Index v = x_hat.cols();
    if (n < 1) throw DimensionMismatch("ica_ebm: empty input");
    if (n > v)
        throw DimensionMismatch("ica_ebm needs at least as many samples as rows");
    if (v < 8) throw TooFewSamples("ica_ebm needs at least 8 samples");

    const Mat<Scalar> xc = x_hat.colwise() - x_hat.rowwise().mean();
    const Mat<Scalar> cov = xc * xc.transpose() / Scalar(v);
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(cov);
    if (es.info() != Eigen::Success)
        throw NumericError("whitening eigendecomposition failed");
    const Vec<Scalar>& evals = es.eigenvalues();
    if (!(evals(0) > evals(n - 1) * Scalar(1e-12)) || !(evals(n - 1) > Scalar(0)))
        throw DegenerateInput("rank-deficient input (smallest/largest eigenvalue " +
                              std::to_string(double(evals(0))) + "/" +
                              std::to_string(double(evals(n - 1))) + ")");
    const Mat<Scalar> whitener =
        evals.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    const Mat<Scalar> z = whitener * x_hat;
    const Scalar logdet_whitener = -evals.array().log().sum() / 2;

    std::optional<detail::DescentOutcome<Scalar>> best;
    int best_restart = 0;
    for (int r = 0; r < config.restarts; ++r) {
        std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ull +
                            static_cast<std::uint64_t>(r) + 1);
        auto outcome = detail::minimize_whitened(
            detail::random_orthogonal<Scalar>(n, rng), z, config);
        if (!best || outcome.cost < best->cost) {
            best = std::move(outcome);
            best_restart = r;
        }
    }

    IcaResult<Scalar> result;
    result.w = best->m * whitener;
    result.y = result.w * x_hat;
    result.cost_trace.reserve(best->trace.size());
    for (const Scalar c : best->trace)
        result.cost_trace.push_back(c - logdet_whitener);
    result.converged = best->converged;
    result.iters = best->iters;
    result.best_restart = best_restart;
    return result;
}

// Sparsity-aware variant: identical machinery with the smoothed l1
// penalty active (config.lambda > 0); with lambda = 0 it coincides with
// ica_ebm exactly.
template <class Scalar>
IcaResult<Scalar> sparse_ica_ebm(const Mat<Scalar>& x_hat,
                                 const IcaConfig& config) {
    return ica_ebm(x_hat, config);
}

// Normalized Amari inter-symbol interference of G = w*a; 0 iff G is a
// scaled permutation, 1 for the worst case (all-equal magnitudes).
template <class Scalar>
Scalar isi(const Mat<Scalar>& w, const Mat<Scalar>& a) {
    if (w.rows() != w.cols() || a.rows() != a.cols() || w.cols() != a.rows())
        throw DimensionMismatch("isi expects square matrices of equal size");
    const Index n = w.rows();
    if (n < 2) return Scalar(0);
    const Mat<Scalar> g = (w * a).cwiseAbs();
    Scalar total = 0;
    for (Index i = 0; i < n; ++i) {
        const Scalar mx = g.row(i).maxCoeff();
        if (mx > Scalar(0)) total += g.row(i).sum() / mx - Scalar(1);
    }
    for (Index j = 0; j < n; ++j) {
        const Scalar mx = g.col(j).maxCoeff();
        if (mx > Scalar(0)) total += g.col(j).sum() / mx - Scalar(1);
    }
    return total / Scalar(2 * n * (n - 1));
}

}  // namespace icatext
