#include "icatext/tokenizer.hpp"

#include "icatext/stopwords.hpp"

#include <cstdint>

namespace icatext {
namespace {

struct Codepoint {
    char32_t value;
    int width;  // bytes consumed; 1 on malformed input (byte passed through)
};

Codepoint decode_utf8(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t i) {
        return i < s.size() &&
               (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        return {static_cast<char32_t>(((b0 & 0x1Fu) << 6) |
                                      (static_cast<unsigned char>(s[pos + 1]) & 0x3Fu)),
                2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        return {static_cast<char32_t>(((b0 & 0x0Fu) << 12) |
                                      ((static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 6) |
                                      (static_cast<unsigned char>(s[pos + 2]) & 0x3Fu)),
                3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        return {static_cast<char32_t>(((b0 & 0x07u) << 18) |
                                      ((static_cast<unsigned char>(s[pos + 1]) & 0x3Fu) << 12) |
                                      ((static_cast<unsigned char>(s[pos + 2]) & 0x3Fu) << 6) |
                                      (static_cast<unsigned char>(s[pos + 3]) & 0x3Fu)),
                4};
    }
    return {b0, 1};
}

bool is_space_cp(char32_t c) {
    switch (c) {
        case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
        case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
        case 0x205F: case 0x3000:
            return true;
        default:
            return c >= 0x2000 && c <= 0x200A;
    }
}

// Edge punctuation to strip. '#' and '@' are deliberately kept so hashtag
// and mention tokens survive intact.
bool is_strippable_punct_cp(char32_t c) {
    if (c < 0x80) {
        if (c == U'#' || c == U'@') return false;
        return (c >= U'!' && c <= U'/') || (c >= U':' && c <= U'?') ||
               (c >= U'[' && c <= U'`') || (c >= U'{' && c <= U'~');
    }
    switch (c) {
        case 0x00A1: case 0x00AB: case 0x00BB: case 0x00BF:
        case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014:
        case 0x2015: case 0x2018: case 0x2019: case 0x201C: case 0x201D:
        case 0x2026: case 0x2032: case 0x2033:
            return true;
        default:
            return false;
    }
}

// Decodes `raw` into codepoints, strips strippable punctuation from both
// edges, lowercases ASCII, and re-encodes (by slicing the original bytes
// for the kept range, with ASCII lowercasing applied).
std::string finish_token(std::string_view raw, const TokenizeConfig& config) {
    std::vector<std::pair<std::size_t, int>> cps;  // (byte offset, width)
    std::vector<char32_t> vals;
    std::size_t i = 0;
    while (i < raw.size()) {
        const Codepoint cp = decode_utf8(raw, i);
        cps.emplace_back(i, cp.width);
        vals.push_back(cp.value);
        i += cp.width;
    }
    std::size_t lo = 0, hi = vals.size();
    if (config.strip_edge_punctuation) {
        while (lo < hi && is_strippable_punct_cp(vals[lo])) ++lo;
        while (hi > lo && is_strippable_punct_cp(vals[hi - 1])) --hi;
    }
    std::string out;
    for (std::size_t k = lo; k < hi; ++k) {
        const auto [off, width] = cps[k];
        if (width == 1 && config.lowercase) {
            char ch = raw[off];
            if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
            out.push_back(ch);
        } else {
            out.append(raw.substr(off, static_cast<std::size_t>(width)));
        }
    }
    return out;
}

}  // namespace

TokenizeConfig default_tokenize_config() {
    TokenizeConfig config;
    for (const auto& w : default_stop_words()) config.stop_words.insert(w);
    return config;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizeConfig& config) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const Codepoint cp = decode_utf8(text, i);
        if (is_space_cp(cp.value)) {
            i += cp.width;
            continue;
        }
        const std::size_t start = i;
        while (i < n) {
            const Codepoint c2 = decode_utf8(text, i);
            if (is_space_cp(c2.value)) break;
            i += c2.width;
        }
        std::string token = finish_token(text.substr(start, i - start), config);
        if (token.empty()) continue;
        if (config.stop_words.count(token) != 0) continue;
        tokens.push_back(std::move(token));
    }
    return tokens;
}

}  // namespace icatext
