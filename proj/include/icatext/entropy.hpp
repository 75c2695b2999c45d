#pragma once

#include "icatext/detail/entropy_tables.hpp"
#include "icatext/types.hpp"

#include <cmath>
#include <span>
#include <string>

namespace icatext {

// Differential-entropy estimate of one source row: the tightest of
// several maximum-entropy upper bounds, each driven by one
// measuring-function statistic of the standardized sample, plus ln(std)
// so the estimate is exactly scale-equivariant. `bound_index` names the
// winning bound.
template <class Scalar>
struct EntropyEstimate {
    Scalar value = 0;  // nats
    int bound_index = 0;
};

namespace detail {

template <class Scalar>
using Arr = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

inline constexpr int kBoundCount = 5;
// Bound indices, by measuring function of the standardized sample:
//   0  z^2           constant Gaussian bound 0.5 ln(2 pi e)
//   1  sqrt(z^2+d)   smoothed |z|; Laplace-family bound 1 + ln(2 E[.])
//   2  z^4           tabulated exp(-a z^2 - b z^4) family
//   3  z e^{-z^2/2}  tabulated odd family (skew/asymmetry sensitive)
//   4  z^10          tabulated high-order even family (uniform-like)
inline constexpr double kAbsSmoothing = 1e-3;

struct HermiteEval {
    double value;
    double deriv;
};

// C1 cubic Hermite interpolation through (stat, h, slope) knots, constant
// beyond the table. Constant extension keeps the bound valid: h is
// concave in the constraint value with its maximum at the Gaussian point.
inline HermiteEval hermite_eval(std::span<const BoundKnot> knots, double x) {
    if (x <= knots.front().stat) return {knots.front().h, 0.0};
    if (x >= knots.back().stat) return {knots.back().h, 0.0};
    std::size_t lo = 0, hi = knots.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (knots[mid].stat <= x ? lo : hi) = mid;
    }
    const BoundKnot& k0 = knots[lo];
    const BoundKnot& k1 = knots[lo + 1];
    const double hw = k1.stat - k0.stat;
    const double t = (x - k0.stat) / hw;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * k0.h + (t3 - 2 * t2 + t) * hw * k0.slope +
                     (-2 * t3 + 3 * t2) * k1.h + (t3 - t2) * hw * k1.slope;
    const double dv = (6 * t2 - 6 * t) * (k0.h - k1.h) / hw +
                      (3 * t2 - 4 * t + 1) * k0.slope + (3 * t2 - 2 * t) * k1.slope;
    return {v, dv};
}

// Standardized-sample statistics of a row and the induced bounds.
template <class Scalar>
struct RowEntropy {
    Scalar mean = 0, stddev = 0;
    Scalar stat_sabs = 0, stat_m4 = 0, stat_modd = 0, stat_m10 = 0;
    Scalar bounds[kBoundCount] = {};
    Scalar fprime = 0;  // d(active bound)/d(its statistic)
    int index = 0;
    Scalar value = 0;  // min bound + ln(stddev)
};

template <class Scalar>
RowEntropy<Scalar> analyze_row(const Arr<Scalar>& y) {
    RowEntropy<Scalar> r;
    r.mean = y.mean();
    const Arr<Scalar> yc = y - r.mean;
    r.stddev = std::sqrt(yc.square().mean());
    if (!(r.stddev > Scalar(1e-12)))
        throw DegenerateSample("sample standard deviation " +
                               std::to_string(static_cast<double>(r.stddev)));
    const Arr<Scalar> z = yc / r.stddev;
    const Arr<Scalar> z2 = z.square();

    r.stat_sabs = (z2 + Scalar(kAbsSmoothing)).sqrt().mean();
    r.stat_m4 = z2.square().mean();
    r.stat_modd = (z * (-z2 / 2).exp()).mean();
    r.stat_m10 = (z2 * z2 * z2 * z2 * z2).mean();

    const HermiteEval quartic = hermite_eval(kQuarticBound, double(r.stat_m4));
    const HermiteEval odd =
        hermite_eval(kOddGaussBound, std::abs(double(r.stat_modd)));
    const HermiteEval dec =
        hermite_eval(kDecupleBound, std::log(double(r.stat_m10)));

    r.bounds[0] = Scalar(kGaussianEntropy);
    r.bounds[1] = Scalar(1) + std::log(Scalar(2) * r.stat_sabs);
    r.bounds[2] = Scalar(quartic.value);
    r.bounds[3] = Scalar(odd.value);
    r.bounds[4] = Scalar(dec.value);

    r.index = 0;
    for (int k = 1; k < kBoundCount; ++k)
        if (r.bounds[k] < r.bounds[r.index]) r.index = k;
    r.value = r.bounds[r.index] + std::log(r.stddev);

    switch (r.index) {
        case 0: r.fprime = Scalar(0); break;
        case 1: r.fprime = Scalar(1) / r.stat_sabs; break;
        case 2: r.fprime = Scalar(quartic.deriv); break;
        case 3:
            r.fprime = Scalar(r.stat_modd < Scalar(0) ? -odd.deriv : odd.deriv);
            break;
        case 4: r.fprime = Scalar(dec.deriv) / r.stat_m10; break;
    }
    return r;
}

// d(estimate)/dy for one row:
//   dH/dy_v = [ f'(stat) (g'(z_v) - mean g' - z_v mean g'z) + z_v ] / (V s)
template <class Scalar>
Arr<Scalar> row_entropy_gradient(const Arr<Scalar>& y,
                                 const RowEntropy<Scalar>& r) {
    const Arr<Scalar> z = (y - r.mean) / r.stddev;
    const Scalar scale = Scalar(1) / (Scalar(y.size()) * r.stddev);
    if (r.index == 0) return z * scale;
    Arr<Scalar> gp;
    switch (r.index) {
        case 1:
            gp = z / (z.square() + Scalar(kAbsSmoothing)).sqrt();
            break;
        case 2:
            gp = Scalar(4) * z.cube();
            break;
        case 3:
            gp = (Scalar(1) - z.square()) * (-z.square() / 2).exp();
            break;
        default: {
            const Arr<Scalar> z3 = z.cube();
            gp = Scalar(10) * z3.square() * z3;
            break;
        }
    }
    const Scalar gp_mean = gp.mean();
    const Scalar gpz_mean = (gp * z).mean();
    return (r.fprime * (gp - gp_mean - z * gpz_mean) + z) * scale;
}

}  // namespace detail

// Entropy estimate of one sample row (length >= 8, nonzero variance).
// Scale-equivariant by construction: estimate(c*y) = estimate(y) + ln|c|.
template <class Derived>
EntropyEstimate<typename Derived::Scalar> estimate_entropy(
    const Eigen::MatrixBase<Derived>& row) {
    using Scalar = typename Derived::Scalar;
    if (row.rows() != 1 && row.cols() != 1)
        throw DimensionMismatch("estimate_entropy expects a vector");
    if (row.size() < 8)
        throw TooFewSamples("estimate_entropy needs at least 8 samples, got " +
                            std::to_string(row.size()));
    const detail::Arr<Scalar> y = row.derived().reshaped().array();
    const auto r = detail::analyze_row(y);
    return {r.value, r.index};
}

}  // namespace icatext
