#include "biasgauge/dependence.hpp"

#include <cmath>

#include "biasgauge/error.hpp"

namespace biasgauge {

const char* to_string(EffectMagnitude magnitude) noexcept {
    switch (magnitude) {
        case EffectMagnitude::VerySmall: return "VERY SMALL";
        case EffectMagnitude::Small: return "SMALL";
        case EffectMagnitude::Medium: return "MEDIUM";
        case EffectMagnitude::Large: return "LARGE";
    }
    return "VERY SMALL";
}

namespace {

// Shared finishing step: totals, expected frequencies and both proportion
// matrices from an observed count matrix.
ContingencyTable finish_table(std::vector<std::int64_t> observed, std::size_t levels) {
    ContingencyTable table;
    table.levels = levels;
    table.observed = std::move(observed);
    table.row_totals.assign(levels, 0);
    for (std::size_t a = 0; a < levels; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::int64_t count = table.observed[table.at(a, t)];
            table.row_totals[a] += count;
            table.col_totals[t] += count;
            table.n += count;
        }
    }
    for (std::size_t a = 0; a < levels; ++a) {
        if (table.row_totals[a] == 0)
            raise(ErrorCode::DegenerateMarginal,
                  "protected level at index " + std::to_string(a) +
                      " has zero rows; expected frequencies divide by zero");
    }
    for (std::size_t t = 0; t < 2; ++t) {
        if (table.col_totals[t] == 0)
            raise(ErrorCode::DegenerateMarginal,
                  "target level " + std::to_string(t) +
                      " has zero rows; expected frequencies divide by zero");
    }

    table.expected.resize(levels * 2);
    table.observed_prop.resize(levels * 2);
    table.expected_prop.resize(levels * 2);
    const double n = double(table.n);
    for (std::size_t a = 0; a < levels; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = table.at(a, t);
            // Products of counts stay below 2^53 for any dataset this tool
            // handles, so the division is the only rounding step.
            table.expected[i] = double(table.row_totals[a]) * double(table.col_totals[t]) / n;
            table.observed_prop[i] = double(table.observed[i]) / n;
            table.expected_prop[i] = table.expected[i] / n;
        }
    }
    return table;
}

}  // namespace

ContingencyTable build_contingency(const Dataset& dataset) {
    std::vector<std::int64_t> observed(dataset.level_count() * 2, 0);
    for (const auto& cell : dataset.cells)
        ++observed[cell.protected_index * 2 + cell.target_index];
    return finish_table(std::move(observed), dataset.level_count());
}

ContingencyTable contingency_from_counts(const std::vector<std::array<std::int64_t, 2>>& counts) {
    if (counts.empty())
        raise(ErrorCode::DegenerateMarginal, "contingency table needs at least one level");
    std::vector<std::int64_t> observed;
    observed.reserve(counts.size() * 2);
    for (const auto& row : counts) {
        if (row[0] < 0 || row[1] < 0)
            raise(ErrorCode::InvalidArgument, "contingency counts must be non-negative");
        observed.push_back(row[0]);
        observed.push_back(row[1]);
    }
    return finish_table(std::move(observed), counts.size());
}

double chi_square(const ContingencyTable& table) {
    double sum = 0.0;
    for (std::size_t i = 0; i < table.observed.size(); ++i) {
        const double diff = double(table.observed[i]) - table.expected[i];
        sum += diff * diff / table.expected[i];
    }
    return sum;
}

double contingency_coefficient(double chi_square_value, std::int64_t n) {
    if (n < 1) raise(ErrorCode::InvalidArgument, "contingency coefficient needs n >= 1");
    if (chi_square_value < 0.0)
        raise(ErrorCode::InvalidArgument, "chi-square must be non-negative");
    return std::sqrt(chi_square_value / (chi_square_value + double(n)));
}

double effect_size_w(const ContingencyTable& table) {
    double sum = 0.0;
    for (std::size_t i = 0; i < table.observed_prop.size(); ++i) {
        const double diff = table.observed_prop[i] - table.expected_prop[i];
        sum += diff * diff / table.expected_prop[i];
    }
    return std::sqrt(sum);
}

EffectMagnitude classify_magnitude(double w) {
    if (w < 0.0) raise(ErrorCode::InvalidArgument, "effect size must be non-negative");
    if (w < 0.1) return EffectMagnitude::VerySmall;
    if (w < 0.3) return EffectMagnitude::Small;
    if (w < 0.5) return EffectMagnitude::Medium;
    return EffectMagnitude::Large;
}

DependenceSummary summarize_dependence(const ContingencyTable& table) {
    DependenceSummary summary;
    summary.chi_square = chi_square(table);
    summary.contingency_coefficient = contingency_coefficient(summary.chi_square, table.n);
    summary.effect_size_w = effect_size_w(table);
    summary.magnitude = classify_magnitude(summary.effect_size_w);
    return summary;
}

}  // namespace biasgauge
