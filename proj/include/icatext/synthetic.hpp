#pragma once

#include "icatext/ica.hpp"
#include "icatext/types.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace icatext {

// Unit-variance source families for BSS benchmarks and tests.
enum class SourceKind {
    Laplace,       // super-Gaussian
    Uniform,       // sub-Gaussian
    BimodalGauss,  // two-component Gaussian mixture at +-0.9
    SparseSpikes,  // Bernoulli(0.12) * |Laplace|, tf-idf-like row
};

inline SourceKind parse_source_kind(const std::string& name) {
    if (name == "laplace") return SourceKind::Laplace;
    if (name == "uniform") return SourceKind::Uniform;
    if (name == "bimodal") return SourceKind::BimodalGauss;
    if (name == "sparse") return SourceKind::SparseSpikes;
    throw ConfigError("unknown source kind '" + name +
                      "' (expected laplace|uniform|bimodal|sparse)");
}

inline const char* to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::Laplace: return "laplace";
        case SourceKind::Uniform: return "uniform";
        case SourceKind::BimodalGauss: return "bimodal";
        default: return "sparse";
    }
}

namespace detail {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

template <class Scalar>
Mat<Scalar> generate_sources(const std::vector<SourceKind>& kinds, Index v,
                             std::mt19937_64& rng) {
    Mat<Scalar> s(static_cast<Index>(kinds.size()), v);
    for (std::size_t n = 0; n < kinds.size(); ++n) {
        for (Index j = 0; j < v; ++j) {
            double x = 0;
            switch (kinds[n]) {
                case SourceKind::Laplace: {
                    const double u = detail::uniform01(rng) - 0.5;
                    x = -std::copysign(std::log(1.0 - 2.0 * std::abs(u)), u) /
                        std::sqrt(2.0);
                    break;
                }
                case SourceKind::Uniform:
                    x = (2.0 * detail::uniform01(rng) - 1.0) * std::sqrt(3.0);
                    break;
                case SourceKind::BimodalGauss: {
                    const double mode = detail::uniform01(rng) < 0.5 ? -0.9 : 0.9;
                    x = mode + detail::box_muller(rng) * std::sqrt(1.0 - 0.81);
                    break;
                }
                case SourceKind::SparseSpikes: {
                    const bool active = detail::uniform01(rng) < 0.12;
                    const double u = detail::uniform01(rng) - 0.5;
                    x = active ? std::abs(std::log(1.0 - 2.0 * std::abs(u))) : 0.0;
                    break;
                }
            }
            s(static_cast<Index>(n), j) = Scalar(x);
        }
    }
    return s;
}

// Random square mixing matrix with condition number below `cond_max`
// (singular values linearly spaced between 1 and a draw from
// [1.5, cond_max], random orthogonal factors).
template <class Scalar>
Mat<Scalar> random_mixing(Index n, std::mt19937_64& rng,
                          double cond_max = 8.0) {
    const Mat<Scalar> u = detail::random_orthogonal<Scalar>(n, rng);
    const Mat<Scalar> vt = detail::random_orthogonal<Scalar>(n, rng);
    const double cond = 1.5 + detail::uniform01(rng) * (cond_max - 1.5);
    Vec<Scalar> sv(n);
    for (Index i = 0; i < n; ++i)
        sv[i] = Scalar(1.0 + (cond - 1.0) * double(i) / double(std::max<Index>(n - 1, 1)));
    return u * sv.asDiagonal() * vt;
}

}  // namespace icatext
