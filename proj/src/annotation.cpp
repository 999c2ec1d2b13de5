#include "biasgauge/annotation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "biasgauge/error.hpp"

namespace biasgauge {

std::string render_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

namespace {

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

std::string describe_target_mapping(const AuditConfig& config) {
    std::string text = "target 1 <- cells equal to \"" + config.positive_label + "\"; target 0 <- ";
    if (config.negative_label)
        text += "cells equal to \"" + *config.negative_label + "\"";
    else
        text += "all other cells";
    return text;
}

// |P(target=1 | level) - P(target=1)| above the threshold, per level.
std::vector<RiskFlag> high_skew_flags(const ProbabilityTables& tables, double threshold) {
    std::vector<RiskFlag> flags;
    const double base = tables.prior_target[1];
    for (std::size_t a = 0; a < tables.protected_levels.size(); ++a) {
        const ProbValue& cond = tables.cond_target_given_protected[tables.at(a, 1)];
        if (!cond.defined) continue;
        const double skew = std::abs(cond.value - base);
        if (skew <= threshold) continue;
        RiskFlag flag;
        flag.kind = FlagKind::HighSkew;
        flag.protected_level = tables.protected_levels[a];
        flag.value = skew;
        flag.message = "P(target=1 | " + tables.protected_levels[a] + ") = " +
                       render_fixed(cond.value, 3) + " deviates from P(target=1) = " +
                       render_fixed(base, 3) + " by " + render_fixed(skew, 3) +
                       " (threshold " + render_fixed(threshold, 3) + ")";
        flags.push_back(std::move(flag));
    }
    return flags;
}

void sort_flags(std::vector<RiskFlag>& flags) {
    std::sort(flags.begin(), flags.end(), [](const RiskFlag& lhs, const RiskFlag& rhs) {
        if (lhs.kind != rhs.kind) return int(lhs.kind) < int(rhs.kind);
        if (lhs.protected_level != rhs.protected_level)
            return lhs.protected_level < rhs.protected_level;
        return lhs.target_level.value_or("") < rhs.target_level.value_or("");
    });
}

// Shared tail of both annotate paths: flags, warnings, timestamps.
void finish_document(AnnotationDocument& document, const FlagThresholds& thresholds) {
    document.flags = zero_support_flags(document.tables, thresholds.low_prior);
    auto skew = high_skew_flags(document.tables, thresholds.high_skew);
    document.flags.insert(document.flags.end(), skew.begin(), skew.end());
    sort_flags(document.flags);
    if (document.tables.normalization_warning)
        document.warnings.push_back(document.tables.normalization_warning->message);
    document.created_at = utc_now();
}

}  // namespace

AnnotationDocument annotate(const Dataset& dataset, const AuditConfig& config,
                            const FlagThresholds& thresholds, const std::string& dataset_name) {
    AnnotationDocument document;
    document.meta.name = dataset_name;
    document.meta.n_rows = dataset.n_rows;
    document.meta.source_kind = kSourceDelimitedFile;
    document.meta.source_digest = dataset.source_digest;
    document.meta.config = config;
    document.meta.thresholds = thresholds;
    document.meta.target_semantics = describe_target_mapping(config);

    // The probability sections tolerate zero-support cells; only the
    // frequency statistics become meaningless on a degenerate marginal, so
    // that failure downgrades the dependence section instead of aborting.
    try {
        document.dependence.summary = summarize_dependence(build_contingency(dataset));
        document.dependence.computable = true;
    } catch (const Error& error) {
        if (error.code() != ErrorCode::DegenerateMarginal) throw;
        document.dependence.computable = false;
        document.dependence.reason = error.what();
    }

    document.tables = probability_tables(dataset);
    finish_document(document, thresholds);
    return document;
}

AnnotationDocument annotate_specified(const std::vector<std::string>& levels,
                                      const std::vector<double>& prior_protected,
                                      const std::vector<std::array<double, 2>>& cond_target_given_protected,
                                      const FlagThresholds& thresholds, const std::string& name) {
    AnnotationDocument document;
    document.meta.name = name;
    document.meta.source_kind = kSourceSpecifiedPriors;
    document.meta.thresholds = thresholds;
    document.meta.target_semantics = "target levels specified directly as probabilities";

    document.dependence.computable = false;
    document.dependence.reason =
        "probabilities were specified directly; no counts to build a contingency table from";

    document.tables = from_specified_priors(levels, prior_protected, cond_target_given_protected);
    finish_document(document, thresholds);
    return document;
}

AnnotationDocument example_document(const std::string& name, const FlagThresholds& thresholds) {
    if (name == "motivating") {
        // A hiring-style population where the group shares were stated as
        // 60% / 35% / 15% (sum 1.1 — deliberately kept, to show the
        // normalization warning) with per-group success rates 0.7 / 0.2 / 0.6.
        return annotate_specified({"white", "black", "Asian"}, {0.60, 0.35, 0.15},
                                  {{{0.7, 0.3}}, {{0.2, 0.8}}, {{0.6, 0.4}}}, thresholds,
                                  "motivating");
    }
    raise(ErrorCode::UnknownFixture,
          "unknown example \"" + name + "\"; available examples: motivating");
}

std::string render_text(const AnnotationDocument& document) {
    std::ostringstream out;
    const ProbabilityTables& tables = document.tables;
    const std::size_t r = tables.protected_levels.size();

    out << "annotation: " << document.meta.name;
    if (document.meta.source_kind == kSourceDelimitedFile)
        out << " (" << document.meta.n_rows << " rows)";
    out << "\n";

    out << "dependence: ";
    if (document.dependence.computable) {
        const DependenceSummary& s = document.dependence.summary;
        out << "magnitude " << to_string(s.magnitude) << ", w " << render_fixed(s.effect_size_w, 3)
            << ", C " << render_fixed(s.contingency_coefficient, 3) << ", chi-square "
            << render_fixed(s.chi_square, 3) << "\n";
    } else {
        out << "not computable (" << document.dependence.reason << ")\n";
    }

    out << "diverseness (target): ";
    for (std::size_t t = 0; t < 2; ++t)
        out << (t ? ", " : "") << tables.target_levels[t] << " "
            << render_fixed(tables.prior_target[t], 3);
    out << "\n";
    out << "diverseness (protected):\n";
    for (std::size_t a = 0; a < r; ++a)
        out << "  " << tables.protected_levels[a] << " "
            << render_fixed(tables.prior_protected[a], 3) << "\n";

    out << "inclusiveness (joint):\n";
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t t = 0; t < 2; ++t)
            out << "  " << tables.protected_levels[a] << " & " << tables.target_levels[t] << " "
                << render_fixed(tables.joint[tables.at(a, t)], 3) << "\n";

    const auto render_cell = [](const ProbValue& cell) {
        return cell.defined ? render_fixed(cell.value, 3) : std::string("undefined");
    };
    out << "likelihood P(target | protected):\n";
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t t = 0; t < 2; ++t)
            out << "  " << tables.target_levels[t] << " | " << tables.protected_levels[a] << " "
                << render_cell(tables.cond_target_given_protected[tables.at(a, t)]) << "\n";
    out << "likelihood P(protected | target):\n";
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t t = 0; t < 2; ++t)
            out << "  " << tables.protected_levels[a] << " | " << tables.target_levels[t] << " "
                << render_cell(tables.cond_protected_given_target[tables.at(a, t)]) << "\n";

    out << "flags: " << document.flags.size() << "\n";
    for (const RiskFlag& flag : document.flags)
        out << "  [" << to_string(flag.kind) << "] " << flag.message << "\n";
    out << "warnings: " << document.warnings.size() << "\n";
    for (const std::string& warning : document.warnings) out << "  " << warning << "\n";
    return out.str();
}

}  // namespace biasgauge
