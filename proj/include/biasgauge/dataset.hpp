#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "biasgauge/config.hpp"

namespace biasgauge {

// One retained row, reduced to its (protected level, target level) indices.
struct Cell {
    std::uint32_t protected_index = 0;
    std::uint32_t target_index = 0; // 0 or 1

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Category label assigned to empty protected cells under the as-category
// policy. Parenthesised so it cannot collide with a real level that merely
// looks like a missing marker ("NA", "None", ...), which must stay distinct.
inline constexpr const char* kMissingCategory = "(missing)";

// A typed categorical view of the input: every row is a pair of level
// indices, ready for exact counting. Immutable after construction.
struct Dataset {
    std::size_t n_rows = 0;
    std::vector<std::string> protected_levels; // unique, lexicographically sorted
    std::array<std::string, 2> target_levels{{"0", "1"}};
    std::vector<Cell> cells;                   // cells.size() == n_rows
    std::string source_digest;                 // sha256 of the raw input bytes

    std::size_t level_count() const { return protected_levels.size(); }
};

// Reads, filters and encodes a delimited file per `config`. Deterministic:
// identical bytes and config produce an identical Dataset.
Dataset load_dataset(const std::string& path, const AuditConfig& config);

// Same pipeline over in-memory text; load_dataset delegates here.
Dataset dataset_from_text(const std::string& text, const AuditConfig& config);

struct TargetValidation {
    std::array<std::int64_t, 2> support{}; // rows per target level

    friend bool operator==(const TargetValidation&, const TargetValidation&) = default;
};

// Confirms both target levels are populated and reports their support
// counts; throws DegenerateTarget when one level has zero rows.
TargetValidation validate_binary_target(const Dataset& dataset);

}  // namespace biasgauge
