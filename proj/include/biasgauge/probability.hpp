#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biasgauge/dataset.hpp"

namespace biasgauge {

// A probability cell that distinguishes "no data to condition on" from an
// actual value. UNDEFINED is an explicit state, never NaN and never a silent
// zero: reports must separate "no data" from "probability zero".
struct ProbValue {
    double value = 0.0;
    bool defined = true;

    static ProbValue undefined() { return {0.0, false}; }

    friend bool operator==(const ProbValue&, const ProbValue&) = default;
};

// Attached when specified priors had to be rescaled to sum to 1.
struct NormalizationWarning {
    double raw_sum = 0.0;
    std::string message;

    friend bool operator==(const NormalizationWarning&, const NormalizationWarning&) = default;
};

// The full Bayesian annotation: priors over both partitions, the joint
// matrix, and both conditional matrices, plus the raw counts they came from
// (when they came from counts at all).
struct ProbabilityTables {
    std::vector<std::string> protected_levels;
    std::array<std::string, 2> target_levels{{"0", "1"}};
    std::array<double, 2> prior_target{};
    std::vector<double> prior_protected;                 // r
    std::vector<double> joint;                           // r*2, joint[at(a,y)]
    std::vector<ProbValue> cond_target_given_protected;  // r*2, P(Y=y | A=a)
    std::vector<ProbValue> cond_protected_given_target;  // r*2, P(A=a | Y=y)
    std::vector<std::int64_t> support;                   // r*2 counts; empty when !has_counts
    std::vector<std::int64_t> protected_counts;          // r; empty when !has_counts
    std::array<std::int64_t, 2> target_counts{};
    std::int64_t n = 0;
    bool has_counts = true;
    std::optional<NormalizationWarning> normalization_warning;

    std::size_t at(std::size_t level, std::size_t target) const { return level * 2 + target; }

    friend bool operator==(const ProbabilityTables&, const ProbabilityTables&) = default;
};

struct PriorVectors {
    std::array<double, 2> target{};  // P(Y=y)
    std::vector<double> protected_;  // P(A=a), in protected_levels order
};

struct ConditionalMatrices {
    std::vector<ProbValue> target_given_protected;  // r*2
    std::vector<ProbValue> protected_given_target;  // r*2
};

// Relative frequencies count/n for both partitions.
PriorVectors priors(const Dataset& dataset);

// joint[at(a,y)] = count(A=a and Y=y) / n.
std::vector<double> joints(const Dataset& dataset);

// Conditionals as exact count ratios; cells whose denominator count is zero
// are UNDEFINED.
ConditionalMatrices posteriors(const Dataset& dataset);

// One counting pass producing everything above plus the supports.
ProbabilityTables probability_tables(const Dataset& dataset);

// Builds the tables from directly specified probabilities instead of data:
// `prior_protected` per level and one (P(Y=0|a), P(Y=1|a)) row per level.
// Joints are kept as the raw products prior * conditional so the inputs are
// reproduced verbatim; the stored prior vectors are normalized, with a
// warning attached when the given priors did not sum to 1 (within 1e-9).
// Throws NegativeProbability and RowNotNormalized per the row checks.
ProbabilityTables from_specified_priors(const std::vector<std::string>& levels,
                                        const std::vector<double>& prior_protected,
                                        const std::vector<std::array<double, 2>>& cond_target_given_protected);

// Risk flags, ordered by severity: zero-support, then low-prior, then
// high-skew (the last is computed during annotation, not here).
enum class FlagKind { ZeroSupport = 0, LowPrior = 1, HighSkew = 2 };

// Identifiers: "zero-support", "low-prior", "high-skew".
const char* to_string(FlagKind kind) noexcept;

struct RiskFlag {
    FlagKind kind = FlagKind::ZeroSupport;
    std::string protected_level;
    std::optional<std::string> target_level; // set for zero-support flags
    double value = 0.0;                      // prior (low-prior) or |skew| (high-skew)
    std::string message;

    friend bool operator==(const RiskFlag&, const RiskFlag&) = default;
};

// One zero-support flag per (level, target) pair with no examples, plus a
// low-prior flag per protected level whose prior falls below the threshold.
// For tables without counts, zero support means a joint of exactly 0.
std::vector<RiskFlag> zero_support_flags(const ProbabilityTables& tables,
                                         double low_prior_threshold = 0.01);

}  // namespace biasgauge
