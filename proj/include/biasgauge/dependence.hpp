#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "biasgauge/dataset.hpp"

namespace biasgauge {

enum class EffectMagnitude { VerySmall, Small, Medium, Large };

// Display labels: "VERY SMALL", "SMALL", "MEDIUM", "LARGE".
const char* to_string(EffectMagnitude magnitude) noexcept;

// Observed vs theoretical-independence frequencies for the protected levels
// (rows) against the binary target (columns).
struct ContingencyTable {
    std::size_t levels = 0;                 // r
    std::vector<std::int64_t> observed;     // r*2, row-major
    std::vector<double> expected;           // r*2, row_total * col_total / n
    std::vector<double> observed_prop;      // r*2, observed / n
    std::vector<double> expected_prop;      // r*2, expected / n
    std::vector<std::int64_t> row_totals;   // r
    std::array<std::int64_t, 2> col_totals{};
    std::int64_t n = 0;

    std::size_t at(std::size_t level, std::size_t target) const { return level * 2 + target; }
};

// Exact row counting over the dataset; throws DegenerateMarginal when a
// protected level or a target column has zero total (an expected frequency
// would divide by zero).
ContingencyTable build_contingency(const Dataset& dataset);

// Same table built from explicit per-level (count0, count1) pairs.
ContingencyTable contingency_from_counts(const std::vector<std::array<std::int64_t, 2>>& counts);

// Sum over cells of (observed - expected)^2 / expected; exactly 0 when the
// observed table equals the independence model.
double chi_square(const ContingencyTable& table);

// sqrt(chi2 / (chi2 + n)), in [0, 1).
double contingency_coefficient(double chi_square_value, std::int64_t n);

// Effect size index over all cells: sqrt(sum (p_obs - p_exp)^2 / p_exp),
// computed from the proportion matrices (not via chi-square, so the two can
// cross-check each other).
double effect_size_w(const ContingencyTable& table);

// Magnitude bins with closed lower bounds:
//   w < 0.1 VERY SMALL; 0.1 <= w < 0.3 SMALL; 0.3 <= w < 0.5 MEDIUM; w >= 0.5 LARGE.
EffectMagnitude classify_magnitude(double w);

struct DependenceSummary {
    double chi_square = 0.0;
    double contingency_coefficient = 0.0;
    double effect_size_w = 0.0;
    EffectMagnitude magnitude = EffectMagnitude::VerySmall;

    friend bool operator==(const DependenceSummary&, const DependenceSummary&) = default;
};

DependenceSummary summarize_dependence(const ContingencyTable& table);

}  // namespace biasgauge
