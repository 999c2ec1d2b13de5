#include "biasgauge/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "biasgauge/csv.hpp"
#include "biasgauge/error.hpp"
#include "biasgauge/sha256.hpp"

namespace biasgauge {

namespace {

// Resolves a configured column name to an index. Headerless files use
// 0-based positional names ("0", "1", ...).
std::size_t resolve_column(const std::vector<std::string>& header, const std::string& name,
                           bool has_header, std::size_t width) {
    if (has_header) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            raise(ErrorCode::ColumnNotFound, "column \"" + name + "\" not found in header");
        return std::size_t(it - header.begin());
    }
    std::size_t index = 0;
    for (const char c : name) {
        if (c < '0' || c > '9' || name.size() > 9)
            raise(ErrorCode::ColumnNotFound,
                  "column \"" + name + "\" is not a 0-based index (file has no header)");
        index = index * 10 + std::size_t(c - '0');
    }
    if (name.empty() || index >= width)
        raise(ErrorCode::ColumnNotFound,
              "column \"" + name + "\" out of range for a " + std::to_string(width) + "-column file");
    return index;
}

}  // namespace

Dataset dataset_from_text(const std::string& text, const AuditConfig& config) {
    config.validate();

    std::string body = text;
    // A UTF-8 byte-order mark would otherwise corrupt the first header name.
    if (body.size() >= 3 && body.compare(0, 3, "\xEF\xBB\xBF") == 0) body.erase(0, 3);

    const auto rows = parse_delimited(body, config.delimiter);
    if (rows.empty()) {
        if (config.has_header)
            raise(ErrorCode::ColumnNotFound,
                  "column \"" + config.protected_column + "\" not found: input has no header row");
        raise(ErrorCode::EmptyAfterFiltering, "input contains no data rows");
    }

    std::size_t width = rows.front().size();
    for (const auto& row : rows) width = std::max(width, row.size());

    std::vector<std::string> header;
    std::size_t first_data_row = 0;
    if (config.has_header) {
        header = rows.front();
        first_data_row = 1;
    }
    const std::size_t protected_index =
        resolve_column(header, config.protected_column, config.has_header, width);
    const std::size_t target_index =
        resolve_column(header, config.target_column, config.has_header, width);

    // First pass: apply the missing policy and the target mapping, keeping
    // raw protected labels until the level list can be frozen.
    struct RawCell {
        std::string protected_label;
        std::uint32_t target = 0;
    };
    std::vector<RawCell> raw;
    raw.reserve(rows.size());
    for (std::size_t r = first_data_row; r < rows.size(); ++r) {
        const auto& row = rows[r];
        // A cell is missing when it is empty or the (ragged) row ends before
        // it; whitespace is content, not missingness.
        const std::string target_cell = target_index < row.size() ? row[target_index] : "";
        if (target_cell.empty()) continue; // no outcome level to file the row under

        std::string protected_cell = protected_index < row.size() ? row[protected_index] : "";
        if (protected_cell.empty()) {
            if (config.missing_policy == MissingPolicy::DropRow) continue;
            protected_cell = kMissingCategory;
        }

        std::uint32_t target = 0;
        if (target_cell == config.positive_label) {
            target = 1;
        } else if (config.negative_label && target_cell != *config.negative_label) {
            raise(ErrorCode::TargetNotBinary,
                  "target cell \"" + target_cell + "\" matches neither the positive label \"" +
                      config.positive_label + "\" nor the negative label \"" + *config.negative_label + "\"");
        }
        raw.push_back({std::move(protected_cell), target});
    }
    if (raw.empty())
        raise(ErrorCode::EmptyAfterFiltering, "no rows remain after applying the missing policy");

    // Freeze the canonical (lexicographic) level order, then encode rows.
    std::map<std::string, std::uint32_t> level_index;
    for (const auto& cell : raw) level_index.emplace(cell.protected_label, 0);
    Dataset dataset;
    dataset.protected_levels.reserve(level_index.size());
    for (auto& [label, index] : level_index) {
        index = std::uint32_t(dataset.protected_levels.size());
        dataset.protected_levels.push_back(label);
    }
    dataset.cells.reserve(raw.size());
    for (const auto& cell : raw)
        dataset.cells.push_back({level_index.at(cell.protected_label), cell.target});
    dataset.n_rows = dataset.cells.size();
    dataset.source_digest = sha256_hex(text);
    return dataset;
}

Dataset load_dataset(const std::string& path, const AuditConfig& config) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        raise(ErrorCode::FileNotReadable, "cannot open \"" + path + "\" for reading");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad())
        raise(ErrorCode::FileNotReadable, "failed while reading \"" + path + "\"");
    return dataset_from_text(buffer.str(), config);
}

TargetValidation validate_binary_target(const Dataset& dataset) {
    TargetValidation report;
    for (const auto& cell : dataset.cells) ++report.support[cell.target_index];
    for (std::size_t t = 0; t < 2; ++t) {
        if (report.support[t] == 0)
            raise(ErrorCode::DegenerateTarget,
                  "target level " + dataset.target_levels[t] +
                      " has zero support; every conditional on it is undefined");
    }
    return report;
}

}  // namespace biasgauge
