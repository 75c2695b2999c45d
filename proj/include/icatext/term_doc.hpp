#pragma once

#include "icatext/dataset.hpp"
#include "icatext/tokenizer.hpp"
#include "icatext/types.hpp"
#include "icatext/vocabulary.hpp"

#include <span>
#include <string>
#include <vector>

namespace icatext {

enum class Weighting { RawCount, TfIdf };

enum class IdfVariant {
    Smooth,   // ln((1+V)/(1+df)) + 1; never zero, the default
    Classic,  // ln(V/df) + 1
};

// Word-by-document observation matrix: values(n, v) is the weight of
// vocabulary term n in document v.
struct TermDocMatrix {
    Mat<double> values;
    Vocabulary vocab;
    std::vector<std::string> doc_ids;
    Weighting weighting = Weighting::RawCount;

    Index num_terms() const { return values.rows(); }
    Index num_docs() const { return values.cols(); }
};

// Tokenizes every document and builds the raw count matrix over the
// vocabulary of all surviving tokens. Throws EmptyVocabulary if nothing
// survives tokenization.
TermDocMatrix build_matrix(std::span<const Document> docs,
                           const TokenizeConfig& config);

// Count matrix against a fixed (training) vocabulary; out-of-vocabulary
// tokens are dropped. Documents may produce all-zero columns.
TermDocMatrix count_matrix(std::span<const Document> docs,
                           const TokenizeConfig& config,
                           const Vocabulary& vocab);

// Per-term idf weights fitted from a raw count matrix.
Vec<double> idf_weights(const TermDocMatrix& counts,
                        IdfVariant variant = IdfVariant::Smooth);

// Reweights raw counts with the given idf vector (tf = raw count).
TermDocMatrix apply_tfidf(const TermDocMatrix& counts, const Vec<double>& idf);

// Fits idf on `counts` and applies it. Throws WrongWeighting if the
// input is already tf-idf weighted.
TermDocMatrix tfidf(const TermDocMatrix& counts,
                    IdfVariant variant = IdfVariant::Smooth);

const char* to_string(IdfVariant variant);
IdfVariant parse_idf_variant(const std::string& name);

}  // namespace icatext
