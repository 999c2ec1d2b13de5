#pragma once

#include <string>
#include <vector>

namespace biasgauge {

// Splits RFC-4180-style delimited text into rows of raw fields. Quoted fields
// may contain the delimiter, doubled quotes, and embedded line breaks. Both
// LF and CRLF terminate records; a missing final newline is accepted. No
// trimming is performed: cell content is preserved byte-for-byte.
std::vector<std::vector<std::string>> parse_delimited(const std::string& text, char delimiter);

}  // namespace biasgauge
