#pragma once

#include "icatext/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace icatext {

// Ordered term list with its inverse index. Order is lexicographic
// (byte-wise), which makes matrix row layout deterministic.
class Vocabulary {
  public:
    Vocabulary() = default;

    // `terms` must already be sorted and unique.
    static Vocabulary from_sorted_terms(std::vector<std::string> terms);

    template <class Container>
    static Vocabulary from_token_lists(const Container& token_lists) {
        std::vector<std::string> terms;
        for (const auto& tokens : token_lists)
            terms.insert(terms.end(), tokens.begin(), tokens.end());
        std::sort(terms.begin(), terms.end());
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
        return from_sorted_terms(std::move(terms));
    }

    Index size() const { return static_cast<Index>(terms_.size()); }
    const std::string& term(Index i) const {
        return terms_.at(static_cast<std::size_t>(i));
    }
    const std::vector<std::string>& terms() const { return terms_; }

    std::optional<Index> find(std::string_view term) const {
        auto it = index_.find(std::string(term));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, Index> index_;
};

inline Vocabulary Vocabulary::from_sorted_terms(std::vector<std::string> terms) {
    Vocabulary v;
    v.terms_ = std::move(terms);
    v.index_.reserve(v.terms_.size());
    for (std::size_t i = 0; i < v.terms_.size(); ++i)
        v.index_.emplace(v.terms_[i], static_cast<Index>(i));
    return v;
}

}  // namespace icatext
