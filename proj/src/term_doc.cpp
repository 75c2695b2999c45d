#include "icatext/term_doc.hpp"

#include <cmath>

namespace icatext {
namespace {

std::vector<std::vector<std::string>> tokenize_all(
    std::span<const Document> docs, const TokenizeConfig& config) {
    std::vector<std::vector<std::string>> token_lists;
    token_lists.reserve(docs.size());
    for (const auto& doc : docs) token_lists.push_back(tokenize(doc.text, config));
    return token_lists;
}

TermDocMatrix fill_counts(std::span<const Document> docs,
                          const std::vector<std::vector<std::string>>& token_lists,
                          Vocabulary vocab) {
    TermDocMatrix out;
    out.weighting = Weighting::RawCount;
    out.vocab = std::move(vocab);
    out.doc_ids.reserve(docs.size());
    for (const auto& doc : docs) out.doc_ids.push_back(doc.id);
    out.values = Mat<double>::Zero(out.vocab.size(),
                                   static_cast<Index>(docs.size()));
    for (std::size_t v = 0; v < token_lists.size(); ++v) {
        for (const auto& token : token_lists[v]) {
            if (auto n = out.vocab.find(token))
                out.values(*n, static_cast<Index>(v)) += 1.0;
        }
    }
    return out;
}

}  // namespace

TermDocMatrix build_matrix(std::span<const Document> docs,
                           const TokenizeConfig& config) {
    if (docs.empty()) throw TooFewSamples("build_matrix needs at least one document");
    auto token_lists = tokenize_all(docs, config);
    Vocabulary vocab = Vocabulary::from_token_lists(token_lists);
    if (vocab.size() == 0)
        throw EmptyVocabulary("no tokens survived tokenization");
    return fill_counts(docs, token_lists, std::move(vocab));
}

TermDocMatrix count_matrix(std::span<const Document> docs,
                           const TokenizeConfig& config,
                           const Vocabulary& vocab) {
    if (vocab.size() == 0) throw EmptyVocabulary("empty vocabulary");
    return fill_counts(docs, tokenize_all(docs, config), vocab);
}

Vec<double> idf_weights(const TermDocMatrix& counts, IdfVariant variant) {
    if (counts.weighting != Weighting::RawCount)
        throw WrongWeighting("idf must be fitted on raw counts");
    const Index d = counts.num_terms();
    const double num_docs = static_cast<double>(counts.num_docs());
    Vec<double> idf(d);
    for (Index n = 0; n < d; ++n) {
        const double df = (counts.values.row(n).array() > 0.0).count();
        idf[n] = variant == IdfVariant::Smooth
                     ? std::log((1.0 + num_docs) / (1.0 + df)) + 1.0
                     : std::log(num_docs / std::max(df, 1.0)) + 1.0;
    }
    return idf;
}

TermDocMatrix apply_tfidf(const TermDocMatrix& counts, const Vec<double>& idf) {
    if (counts.weighting != Weighting::RawCount)
        throw WrongWeighting("input is already tf-idf weighted");
    if (idf.size() != counts.num_terms())
        throw DimensionMismatch("idf length does not match term count");
    TermDocMatrix out = counts;
    out.values = idf.asDiagonal() * counts.values;
    out.weighting = Weighting::TfIdf;
    return out;
}

TermDocMatrix tfidf(const TermDocMatrix& counts, IdfVariant variant) {
    return apply_tfidf(counts, idf_weights(counts, variant));
}

const char* to_string(IdfVariant variant) {
    return variant == IdfVariant::Smooth ? "smooth" : "classic";
}

IdfVariant parse_idf_variant(const std::string& name) {
    if (name == "smooth") return IdfVariant::Smooth;
    if (name == "classic") return IdfVariant::Classic;
    throw ConfigError("unknown tf-idf variant '" + name +
                      "' (expected smooth|classic)");
}

}  // namespace icatext
