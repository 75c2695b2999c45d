#pragma once

#include "icatext/dataset.hpp"
#include "icatext/types.hpp"
#include "icatext/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icatext {

// Positive class is Unreliable throughout.
struct ConfusionCounts {
    std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
    std::int64_t total() const { return tp + fp + tn + fn; }
};

// Degenerate ratios (0/0) are reported as empty optionals, never as 0.
struct MetricSet {
    std::optional<double> accuracy, sensitivity, precision, f1;
};

inline MetricSet metrics(const ConfusionCounts& counts) {
    if (counts.total() <= 0) throw EmptyEvaluation("no evaluated samples");
    if (counts.tp < 0 || counts.fp < 0 || counts.tn < 0 || counts.fn < 0)
        throw ConfigError("negative confusion count");
    MetricSet m;
    m.accuracy = double(counts.tp + counts.tn) / double(counts.total());
    if (counts.tp + counts.fn > 0)
        m.sensitivity = double(counts.tp) / double(counts.tp + counts.fn);
    if (counts.tp + counts.fp > 0)
        m.precision = double(counts.tp) / double(counts.tp + counts.fp);
    if (m.sensitivity && m.precision && (*m.sensitivity + *m.precision) > 0)
        m.f1 = 2.0 * *m.precision * *m.sensitivity /
               (*m.precision + *m.sensitivity);
    return m;
}

template <class Scalar>
struct ComponentLexicon {
    Index component_index = 0;
    std::vector<std::pair<std::string, Scalar>> entries;  // weight magnitudes, desc
};

// The k vocabulary terms with the largest |a_hat(., component)|, sorted by
// descending magnitude, ties broken lexicographically by term.
template <class Scalar>
ComponentLexicon<Scalar> top_words(const Mat<Scalar>& a_hat,
                                   const Vocabulary& vocab, Index component,
                                   Index k) {
    if (a_hat.rows() != vocab.size())
        throw DimensionMismatch("a_hat has " + std::to_string(a_hat.rows()) +
                                " rows but vocabulary has " +
                                std::to_string(vocab.size()) + " terms");
    if (component < 0 || component >= a_hat.cols())
        throw IndexOutOfRange("component " + std::to_string(component) +
                              " outside [0, " + std::to_string(a_hat.cols()) + ")");
    if (k < 1 || k > a_hat.rows())
        throw IndexOutOfRange("k " + std::to_string(k) + " outside [1, " +
                              std::to_string(a_hat.rows()) + "]");
    std::vector<Index> idx(static_cast<std::size_t>(a_hat.rows()));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Index>(i);
    const auto mag = [&](Index i) { return std::abs(a_hat(i, component)); };
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) {
        if (mag(a) != mag(b)) return mag(a) > mag(b);
        return vocab.term(a) < vocab.term(b);
    });
    ComponentLexicon<Scalar> lex;
    lex.component_index = component;
    lex.entries.reserve(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i)
        lex.entries.emplace_back(vocab.term(idx[static_cast<std::size_t>(i)]),
                                 mag(idx[static_cast<std::size_t>(i)]));
    return lex;
}

// Point-biserial correlation between each source row and the binary label
// (+1 = Unreliable, so positive scores mean unreliable-associated).
// Constant rows yield an empty optional.
template <class Scalar>
std::vector<std::optional<double>> component_class_association(
    const Mat<Scalar>& y_train, const std::vector<Label>& labels) {
    if (static_cast<Index>(labels.size()) != y_train.cols())
        throw DimensionMismatch("labels/columns mismatch in association");
    const Index v = y_train.cols();
    Vec<double> t(v);
    bool has_pos = false, has_neg = false;
    for (Index i = 0; i < v; ++i) {
        const bool unreliable = labels[static_cast<std::size_t>(i)] == Label::Unreliable;
        t[i] = unreliable ? 1.0 : -1.0;
        (unreliable ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg)
        throw SingleClass("association needs both classes present");
    const Vec<double> tc = t.array() - t.mean();
    const double t_norm = tc.norm();
    std::vector<std::optional<double>> scores;
    scores.reserve(static_cast<std::size_t>(y_train.rows()));
    for (Index n = 0; n < y_train.rows(); ++n) {
        Vec<double> row = y_train.row(n).template cast<double>().transpose();
        const Vec<double> rc = row.array() - row.mean();
        const double r_norm = rc.norm();
        if (!(r_norm > 1e-12 * std::max(1.0, row.cwiseAbs().maxCoeff()))) {
            scores.emplace_back(std::nullopt);
            continue;
        }
        scores.emplace_back(rc.dot(tc) / (r_norm * t_norm));
    }
    return scores;
}

}  // namespace icatext
