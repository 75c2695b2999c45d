#pragma once

#include "icatext/types.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace icatext {

struct GaussianKernel {
    double sigma = 1.0;  // exp(-|u-v|^2 / (2 sigma^2))
};
struct RbfKernel {
    double gamma = 1.0;  // exp(-gamma |u-v|^2)
};
struct PolynomialKernel {
    int degree = 2;  // (scale <u,v> + coef0)^degree
    double coef0 = 0.0;
    double scale = 1.0;
};

using KernelSpec = std::variant<GaussianKernel, RbfKernel, PolynomialKernel>;

inline void validate(const KernelSpec& spec) {
    std::visit(
        [](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GaussianKernel>) {
                if (!(k.sigma > 0)) throw ConfigError("gaussian kernel: sigma must be > 0");
            } else if constexpr (std::is_same_v<K, RbfKernel>) {
                if (!(k.gamma > 0)) throw ConfigError("rbf kernel: gamma must be > 0");
            } else {
                if (k.degree < 1) throw ConfigError("polynomial kernel: degree must be >= 1");
            }
        },
        spec);
}

template <class DerivedU, class DerivedV>
double kernel_eval(const KernelSpec& spec, const Eigen::MatrixBase<DerivedU>& u,
                   const Eigen::MatrixBase<DerivedV>& v) {
    if (u.size() != v.size())
        throw DimensionMismatch("kernel_eval: vectors of length " +
                                std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GaussianKernel>) {
                const double d2 = (u - v).squaredNorm();
                return std::exp(-d2 / (2.0 * k.sigma * k.sigma));
            } else if constexpr (std::is_same_v<K, RbfKernel>) {
                return std::exp(-k.gamma * (u - v).squaredNorm());
            } else {
                return std::pow(k.scale * u.dot(v) + k.coef0, k.degree);
            }
        },
        spec);
}

// Soft-margin kernel SVM. `coeffs` holds alpha_i * y_i for the support
// vectors, so the decision value is sum_i coeffs_i K(sv_i, x) + bias.
template <class Scalar>
struct SvmModel {
    Mat<Scalar> support_vectors;  // M x N
    Vec<Scalar> coeffs;           // signed, length M
    Scalar bias = 0;
    KernelSpec kernel;
    Scalar c = 1;
    Scalar dual_objective = 0;  // maximized dual value at the solution
};

template <class Scalar>
struct SvmPrediction {
    std::vector<int> labels;          // +1 / -1 (ties go to +1)
    Vec<Scalar> decision_values;
};

namespace detail {

// Row-wise kernel cache over the training samples.
template <class Scalar>
class KernelCache {
  public:
    KernelCache(const Mat<Scalar>& samples, const KernelSpec& spec)
        : samples_(samples), spec_(spec), rows_(samples.rows()) {}

    const Vec<Scalar>& row(Index i) {
        auto& slot = rows_[static_cast<std::size_t>(i)];
        if (slot.size() == 0) {
            slot.resize(samples_.rows());
            for (Index j = 0; j < samples_.rows(); ++j)
                slot[j] = Scalar(
                    kernel_eval(spec_, samples_.row(i), samples_.row(j)));
        }
        return slot;
    }

  private:
    const Mat<Scalar>& samples_;
    const KernelSpec& spec_;
    std::vector<Vec<Scalar>> rows_;
};

}  // namespace detail

// Trains by sequential minimal optimization with maximal-violating-pair
// working-set selection; stops when the maximum KKT violation drops
// below `tol`. If `dual_trace` is given it receives the dual objective
// after every pair update.
template <class Scalar>
SvmModel<Scalar> svm_fit(const Mat<Scalar>& features,  // V x N, rows = samples
                         const std::vector<int>& labels, const KernelSpec& spec,
                         Scalar c, Scalar tol = Scalar(1e-3),
                         std::vector<Scalar>* dual_trace = nullptr) {
    validate(spec);
    const Index v = features.rows();
    if (static_cast<Index>(labels.size()) != v)
        throw DimensionMismatch("svm_fit: " + std::to_string(labels.size()) +
                                " labels for " + std::to_string(v) + " samples");
    if (!(c > 0)) throw ConfigError("svm_fit: C must be > 0");
    if (!(tol > 0)) throw ConfigError("svm_fit: tol must be > 0");
    bool has_pos = false, has_neg = false;
    for (int y : labels) {
        if (y == 1) has_pos = true;
        else if (y == -1) has_neg = true;
        else throw ConfigError("svm_fit: labels must be +1 or -1");
    }
    if (!has_pos || !has_neg)
        throw SingleClass("svm_fit needs both classes present");

    detail::KernelCache<Scalar> cache(features, spec);
    std::vector<Scalar> alpha(static_cast<std::size_t>(v), Scalar(0));
    // grad_i = (Q alpha)_i - 1 with Q_ij = y_i y_j K_ij; zero alpha start.
    std::vector<Scalar> grad(static_cast<std::size_t>(v), Scalar(-1));
    const auto y = [&](Index i) { return Scalar(labels[static_cast<std::size_t>(i)]); };

    const long long max_iter =
        std::max<long long>(10'000'000, 100LL * static_cast<long long>(v));
    long long iter = 0;
    Scalar final_m = 0, final_mm = 0;
    while (true) {
        if (++iter > max_iter)
            throw NoConvergence("svm_fit hit the iteration cap (" +
                                std::to_string(max_iter) + ")");
        Index i = -1, j = -1;
        Scalar up_max = -std::numeric_limits<Scalar>::infinity();
        Scalar low_min = std::numeric_limits<Scalar>::infinity();
        for (Index k = 0; k < v; ++k) {
            const std::size_t ks = static_cast<std::size_t>(k);
            const Scalar score = -y(k) * grad[ks];
            const bool in_up = (y(k) > 0) ? alpha[ks] < c : alpha[ks] > 0;
            const bool in_low = (y(k) > 0) ? alpha[ks] > 0 : alpha[ks] < c;
            if (in_up && score > up_max) { up_max = score; i = k; }
            if (in_low && score < low_min) { low_min = score; j = k; }
        }
        final_m = up_max;
        final_mm = low_min;
        if (i < 0 || j < 0 || up_max - low_min < tol) break;

        const Vec<Scalar>& ki = cache.row(i);
        const Vec<Scalar>& kj = cache.row(j);
        const std::size_t is = static_cast<std::size_t>(i);
        const std::size_t js = static_cast<std::size_t>(j);
        const Scalar old_ai = alpha[is], old_aj = alpha[js];
        constexpr Scalar kTau = Scalar(1e-12);
        if (labels[is] != labels[js]) {
            Scalar quad = ki[i] + kj[j] + 2 * ki[j];
            if (quad <= 0) quad = kTau;
            const Scalar delta = (-grad[is] - grad[js]) / quad;
            const Scalar diff = alpha[is] - alpha[js];
            alpha[is] += delta;
            alpha[js] += delta;
            if (diff > 0) {
                if (alpha[js] < 0) { alpha[js] = 0; alpha[is] = diff; }
            } else {
                if (alpha[is] < 0) { alpha[is] = 0; alpha[js] = -diff; }
            }
            if (diff > 0) {
                if (alpha[is] > c) { alpha[is] = c; alpha[js] = c - diff; }
            } else {
                if (alpha[js] > c) { alpha[js] = c; alpha[is] = c + diff; }
            }
        } else {
            Scalar quad = ki[i] + kj[j] - 2 * ki[j];
            if (quad <= 0) quad = kTau;
            const Scalar delta = (grad[is] - grad[js]) / quad;
            const Scalar sum = alpha[is] + alpha[js];
            alpha[is] -= delta;
            alpha[js] += delta;
            if (sum > c) {
                if (alpha[is] > c) { alpha[is] = c; alpha[js] = sum - c; }
                if (alpha[js] > c) { alpha[js] = c; alpha[is] = sum - c; }
            } else {
                if (alpha[js] < 0) { alpha[js] = 0; alpha[is] = sum; }
                if (alpha[is] < 0) { alpha[is] = 0; alpha[js] = sum; }
            }
        }
        const Scalar dai = alpha[is] - old_ai;
        const Scalar daj = alpha[js] - old_aj;
        for (Index k = 0; k < v; ++k) {
            const std::size_t ks = static_cast<std::size_t>(k);
            grad[ks] += y(k) * (y(i) * ki[k] * dai + y(j) * kj[k] * daj);
        }
        if (dual_trace) {
            Scalar ea = 0, ag = 0;
            for (Index k = 0; k < v; ++k) {
                ea += alpha[static_cast<std::size_t>(k)];
                ag += alpha[static_cast<std::size_t>(k)] * grad[static_cast<std::size_t>(k)];
            }
            dual_trace->push_back((ea - ag) / 2);
        }
    }

    SvmModel<Scalar> model;
    model.kernel = spec;
    model.c = c;
    // dual objective: e^T a - a^T Q a / 2 = (e^T a - a^T grad) / 2
    Scalar ea = 0, ag = 0;
    for (Index k = 0; k < v; ++k) {
        ea += alpha[static_cast<std::size_t>(k)];
        ag += alpha[static_cast<std::size_t>(k)] * grad[static_cast<std::size_t>(k)];
    }
    model.dual_objective = (ea - ag) / 2;
    // bias: average -y_i grad_i over free support vectors; midpoint of the
    // KKT bounds when none is free
    Scalar bias_sum = 0;
    Index free_count = 0;
    for (Index k = 0; k < v; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        if (alpha[ks] > 0 && alpha[ks] < c) {
            bias_sum += -y(k) * grad[ks];
            ++free_count;
        }
    }
    model.bias = free_count > 0 ? bias_sum / Scalar(free_count)
                                : (final_m + final_mm) / 2;

    Index m_count = 0;
    for (const Scalar a : alpha)
        if (a > 0) ++m_count;
    if (m_count == 0) throw NumericError("svm_fit produced no support vectors");
    model.support_vectors.resize(m_count, features.cols());
    model.coeffs.resize(m_count);
    Index out = 0;
    for (Index k = 0; k < v; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        if (alpha[ks] > 0) {
            model.support_vectors.row(out) = features.row(k);
            model.coeffs[out] = alpha[ks] * y(k);
            ++out;
        }
    }
    return model;
}

template <class Scalar>
SvmPrediction<Scalar> svm_predict(const SvmModel<Scalar>& model,
                                  const Mat<Scalar>& features) {
    if (features.cols() != model.support_vectors.cols())
        throw DimensionMismatch("svm_predict: feature dimension " +
                                std::to_string(features.cols()) + " != model's " +
                                std::to_string(model.support_vectors.cols()));
    SvmPrediction<Scalar> pred;
    pred.decision_values.resize(features.rows());
    pred.labels.reserve(static_cast<std::size_t>(features.rows()));
    for (Index r = 0; r < features.rows(); ++r) {
        Scalar d = model.bias;
        for (Index m = 0; m < model.support_vectors.rows(); ++m)
            d += model.coeffs[m] *
                 Scalar(kernel_eval(model.kernel, model.support_vectors.row(m),
                                    features.row(r)));
        pred.decision_values[r] = d;
        pred.labels.push_back(d >= 0 ? 1 : -1);
    }
    return pred;
}

}  // namespace icatext
