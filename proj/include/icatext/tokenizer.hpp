#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace icatext {

// Tokenization policy. Tokens are produced by splitting on Unicode
// whitespace, stripping leading/trailing punctuation (keeping '#' and '@',
// so hashtags and mentions survive), lowercasing, and dropping stop-words.
struct TokenizeConfig {
    std::unordered_set<std::string> stop_words;
    bool strip_edge_punctuation = true;
    bool lowercase = true;
};

// Config preloaded with the shipped default English stop-word list.
TokenizeConfig default_tokenize_config();

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizeConfig& config);

}  // namespace icatext
