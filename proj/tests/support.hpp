#pragma once

// Shared test helpers: temp files, in-memory dataset construction, and the
// badge text-layer scanner.

#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biasgauge/dataset.hpp"

namespace testsupport {

// Self-cleaning unique directory under the system temp root.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("biasgauge-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::string write(const std::string& filename, const std::string& content) const {
        const auto file_path = path_ / filename;
        std::ofstream file(file_path, std::ios::binary);
        file << content;
        return file_path.string();
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// Builds a Dataset directly from per-level (count of target 0, count of
// target 1) pairs, honouring the canonical sorted level order.
inline biasgauge::Dataset make_dataset(
    std::vector<std::pair<std::string, std::array<std::int64_t, 2>>> counts) {
    std::sort(counts.begin(), counts.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    biasgauge::Dataset dataset;
    for (const auto& [level, pair] : counts) dataset.protected_levels.push_back(level);
    for (std::uint32_t a = 0; a < counts.size(); ++a) {
        for (std::uint32_t t = 0; t < 2; ++t) {
            for (std::int64_t i = 0; i < counts[a].second[t]; ++i)
                dataset.cells.push_back({a, t});
        }
    }
    dataset.n_rows = dataset.cells.size();
    dataset.source_digest = "0000000000000000000000000000000000000000000000000000000000000000";
    return dataset;
}

// CSV text with a header, one (protected,target) pair per row.
inline std::string make_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string text = "group,outcome\n";
    for (const auto& [level, target] : rows) text += level + "," + target + "\n";
    return text;
}

// --- badge text-layer scanning -------------------------------------------

// Character data of every <text> element in an SVG document.
inline std::vector<std::string> svg_text_nodes(const std::string& svg) {
    std::vector<std::string> nodes;
    std::size_t cursor = 0;
    while (true) {
        const std::size_t open = svg.find("<text", cursor);
        if (open == std::string::npos) break;
        const std::size_t start = svg.find('>', open);
        const std::size_t end = svg.find("</text>", start);
        if (start == std::string::npos || end == std::string::npos) break;
        nodes.push_back(svg.substr(start + 1, end - start - 1));
        cursor = end + 7;
    }
    return nodes;
}

// Maximal [0-9]+(.[0-9]+)? runs in a string.
inline std::vector<std::string> numeric_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const auto digit = [&](std::size_t k) { return k < text.size() && text[k] >= '0' && text[k] <= '9'; };
    while (i < text.size()) {
        if (!digit(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (digit(j)) ++j;
        if (j < text.size() && text[j] == '.' && digit(j + 1)) {
            ++j;
            while (digit(j)) ++j;
        }
        tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

// Every numeric token in the badge's text layer must appear verbatim in the
// serialized document. Returns the offending tokens (empty = faithful).
inline std::vector<std::string> unfaithful_tokens(const std::string& svg,
                                                  const std::string& serialized) {
    std::vector<std::string> offending;
    for (const std::string& node : svg_text_nodes(svg)) {
        for (const std::string& token : numeric_tokens(node)) {
            if (serialized.find(token) == std::string::npos) offending.push_back(token);
        }
    }
    return offending;
}

}  // namespace testsupport
