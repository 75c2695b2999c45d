#pragma once

#include <string>
#include <vector>

namespace icatext {

enum class Label { Reliable, Unreliable };

struct Document {
    std::string id;
    std::string text;
    Label label = Label::Reliable;
};

// Loads a dataset CSV with header `id,label,text` (RFC-4180 quoting;
// label is case-insensitive "reliable"/"unreliable"). Throws DataError
// with a line number on malformed rows, duplicate ids, or -- unless
// allow_empty_text -- empty text fields.
std::vector<Document> load_documents(const std::string& path,
                                     bool allow_empty_text = false);

const char* to_string(Label label);
Label parse_label(std::string text, std::size_t line_for_errors = 0);

}  // namespace icatext
