#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biasgauge/config.hpp"
#include "biasgauge/dataset.hpp"
#include "biasgauge/dependence.hpp"
#include "biasgauge/format.hpp"
#include "biasgauge/probability.hpp"

namespace biasgauge {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "biasgauge/annotation/v1";

// Where the numbers in a document came from.
inline constexpr const char* kSourceDelimitedFile = "delimited-file";
inline constexpr const char* kSourceSpecifiedPriors = "specified-priors";

struct DatasetMeta {
    std::string name;
    std::size_t n_rows = 0;
    std::string source_kind;            // delimited-file | specified-priors
    std::string source_digest;          // empty for specified-priors documents
    std::optional<AuditConfig> config;  // absent for specified-priors documents
    FlagThresholds thresholds;
    std::string target_semantics;       // human note on what target 1 means

    friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

// Dependence is a frequency statistic; with a degenerate marginal (or no
// counts at all) the section is carried as "not computable" with the reason,
// while the probability sections still emit.
struct DependenceSection {
    bool computable = false;
    std::string reason;         // set when !computable
    DependenceSummary summary;  // meaningful when computable

    friend bool operator==(const DependenceSection&, const DependenceSection&) = default;
};

// The complete machine-readable audit: metadata, the dependence summary, all
// probability tables, risk flags, and warnings. created_at is the only field
// not reproducible from (source bytes, config, tool version).
struct AnnotationDocument {
    std::string schema = kReportSchema;
    std::string tool_version = kToolVersion;
    std::string created_at;  // ISO-8601 UTC
    DatasetMeta meta;
    DependenceSection dependence;
    ProbabilityTables tables;
    std::vector<RiskFlag> flags;      // sorted: severity, then level, then target
    std::vector<std::string> warnings;

    friend bool operator==(const AnnotationDocument&, const AnnotationDocument&) = default;
};

// Runs every analysis over the dataset and assembles the document.
AnnotationDocument annotate(const Dataset& dataset, const AuditConfig& config,
                            const FlagThresholds& thresholds = {},
                            const std::string& dataset_name = "dataset");

// Same document shape from directly specified probabilities (no counts).
AnnotationDocument annotate_specified(const std::vector<std::string>& levels,
                                      const std::vector<double>& prior_protected,
                                      const std::vector<std::array<double, 2>>& cond_target_given_protected,
                                      const FlagThresholds& thresholds = {},
                                      const std::string& name = "specified");

// Built-in specified-priors example documents (the `--example` pathway).
// The only registered name is "motivating": three groups with priors
// 0.60 / 0.35 / 0.15 and per-group outcome rates, which exercises the
// normalization warning. Throws UnknownFixture for any other name.
AnnotationDocument example_document(const std::string& name, const FlagThresholds& thresholds = {});

// Canonical JSON: stable key order, probabilities carried at full precision
// alongside fixed 3-decimal renderings, UNDEFINED cells as explicit tokens.
std::string serialize(const AnnotationDocument& document);

// Inverse of serialize: parse_document(serialize(d)) == d.
AnnotationDocument parse_document(const std::string& text);

// Deterministic human-readable rendering of the same content.
std::string render_text(const AnnotationDocument& document);

}  // namespace biasgauge
