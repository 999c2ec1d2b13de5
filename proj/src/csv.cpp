#include "biasgauge/csv.hpp"

namespace biasgauge {

// Hand-rolled RFC-4180 state machine. The grammar is small and the edge
// cases that matter here (quoted delimiters, doubled quotes, embedded
// newlines, CRLF, missing final newline) are all covered by the unit tests.
std::vector<std::vector<std::string>> parse_delimited(const std::string& text, char delimiter) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false; // any byte seen since the last record break

    const auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    const auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            in_quotes = true;
            row_started = true;
        } else if (c == delimiter) {
            end_field();
            row_started = true;
        } else if (c == '\n') {
            end_row();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            end_row();
            ++i;
        } else if (c == '\r') {
            end_row(); // lone CR treated as a record break as well
        } else {
            field.push_back(c);
            row_started = true;
        }
    }
    // Final record without trailing newline (also flushes a dangling quote).
    if (row_started || !field.empty() || !row.empty()) end_row();

    return rows;
}

}  // namespace biasgauge
