#include "icatext/dataset.hpp"

#include "icatext/types.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace icatext {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

// RFC-4180 record reader: returns one record's fields, consuming as many
// physical lines as quoted fields require. `line` tracks the physical
// line number of the record start for error messages.
bool read_record(std::istream& in, std::vector<std::string>& fields,
                 std::size_t& line, std::size_t& record_line) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool started = false;
    char c;
    record_line = line + 1;
    while (in.get(c)) {
        started = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            ++line;
            if (!field.empty() && field.back() == '\r') field.pop_back();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(c);
        }
    }
    if (!started) return false;
    if (in_quotes) {
        throw DataError("unterminated quoted field starting near line " +
                        std::to_string(record_line));
    }
    if (!field.empty() && field.back() == '\r') field.pop_back();
    fields.push_back(std::move(field));
    ++line;
    return true;
}

}  // namespace

const char* to_string(Label label) {
    return label == Label::Reliable ? "reliable" : "unreliable";
}

Label parse_label(std::string text, std::size_t line_for_errors) {
    const std::string l = lower(trim(text));
    if (l == "reliable") return Label::Reliable;
    if (l == "unreliable") return Label::Unreliable;
    std::string where = line_for_errors
                            ? " at line " + std::to_string(line_for_errors)
                            : std::string();
    throw DataError("unknown label '" + text + "'" + where +
                    " (expected reliable|unreliable)");
}

std::vector<Document> load_documents(const std::string& path,
                                     bool allow_empty_text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path);

    std::vector<std::string> fields;
    std::size_t line = 0, record_line = 0;
    if (!read_record(in, fields, line, record_line)) {
        throw DataError("empty dataset file: " + path);
    }
    if (fields.size() != 3 || lower(trim(fields[0])) != "id" ||
        lower(trim(fields[1])) != "label" || lower(trim(fields[2])) != "text") {
        throw DataError("line 1: expected header 'id,label,text', got '" +
                        fields[0] + (fields.size() > 1 ? "," + fields[1] : "") +
                        (fields.size() > 2 ? "," + fields[2] : "") + "'");
    }

    std::vector<Document> docs;
    std::unordered_set<std::string> seen_ids;
    while (read_record(in, fields, line, record_line)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != 3) {
            throw DataError("line " + std::to_string(record_line) +
                            ": expected 3 fields (id,label,text), got " +
                            std::to_string(fields.size()));
        }
        Document doc;
        doc.id = trim(fields[0]);
        if (doc.id.empty()) {
            throw DataError("line " + std::to_string(record_line) +
                            ": empty document id");
        }
        if (!seen_ids.insert(doc.id).second) {
            throw DataError("line " + std::to_string(record_line) +
                            ": duplicate document id '" + doc.id + "'");
        }
        doc.label = parse_label(fields[1], record_line);
        doc.text = fields[2];
        if (doc.text.empty() && !allow_empty_text) {
            throw DataError("line " + std::to_string(record_line) +
                            ": empty text field (pass allow_empty to accept)");
        }
        docs.push_back(std::move(doc));
    }
    if (docs.empty()) throw DataError("dataset has a header but no rows: " + path);
    return docs;
}

}  // namespace icatext
