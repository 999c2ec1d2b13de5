#include <algorithm>

#include <json.hpp>

#include "biasgauge/annotation.hpp"
#include "biasgauge/error.hpp"

// Canonical report serialization. ordered_json keeps insertion order, so the
// emitted key order is fixed by construction order here; together with the
// fixed array orders (level order, target order) the output is byte-stable.
// Probabilities are carried twice: full precision for machines, and the
// 3-decimal rendering shown by badges and the text format.

namespace biasgauge {

namespace {

using json = nlohmann::ordered_json;

json prob_or_null(const ProbValue& cell) {
    return cell.defined ? json(cell.value) : json(nullptr);
}

std::string rendered(const ProbValue& cell) {
    return cell.defined ? render_fixed(cell.value, 3) : std::string("undefined");
}

json config_to_json(const AuditConfig& config) {
    json out;
    out["protected_column"] = config.protected_column;
    out["target_column"] = config.target_column;
    out["positive_label"] = config.positive_label;
    out["negative_label"] = config.negative_label ? json(*config.negative_label) : json(nullptr);
    out["missing_policy"] = to_string(config.missing_policy);
    out["delimiter"] = std::string(1, config.delimiter);
    out["has_header"] = config.has_header;
    return out;
}

AuditConfig config_from_json(const json& in) {
    AuditConfig config;
    config.protected_column = in.at("protected_column").get<std::string>();
    config.target_column = in.at("target_column").get<std::string>();
    config.positive_label = in.at("positive_label").get<std::string>();
    if (!in.at("negative_label").is_null())
        config.negative_label = in.at("negative_label").get<std::string>();
    const auto policy = parse_missing_policy(in.at("missing_policy").get<std::string>());
    if (!policy) raise(ErrorCode::InvalidArgument, "unknown missing_policy in document");
    config.missing_policy = *policy;
    const std::string delimiter = in.at("delimiter").get<std::string>();
    if (delimiter.size() != 1) raise(ErrorCode::InvalidArgument, "delimiter must be one character");
    config.delimiter = delimiter.front();
    config.has_header = in.at("has_header").get<bool>();
    return config;
}

}  // namespace

std::string serialize(const AnnotationDocument& document) {
    const ProbabilityTables& tables = document.tables;
    const std::size_t r = tables.protected_levels.size();
    const bool counted = tables.has_counts;

    json out;
    out["schema"] = document.schema;

    json meta;
    meta["name"] = document.meta.name;
    meta["n_rows"] = document.meta.n_rows;
    meta["source"] = document.meta.source_kind;
    meta["source_digest"] =
        document.meta.source_digest.empty() ? json(nullptr) : json(document.meta.source_digest);
    meta["tool_version"] = document.tool_version;
    meta["created_at"] = document.created_at;
    meta["config"] = document.meta.config ? config_to_json(*document.meta.config) : json(nullptr);
    meta["thresholds"] = {{"low_prior", document.meta.thresholds.low_prior},
                          {"high_skew", document.meta.thresholds.high_skew}};
    meta["target_semantics"] = document.meta.target_semantics;
    out["meta"] = std::move(meta);

    json dependence;
    dependence["computable"] = document.dependence.computable;
    if (document.dependence.computable) {
        const DependenceSummary& s = document.dependence.summary;
        dependence["chi_square"] = s.chi_square;
        dependence["contingency_coefficient"] = s.contingency_coefficient;
        dependence["effect_size_w"] = s.effect_size_w;
        dependence["magnitude"] = to_string(s.magnitude);
        dependence["rendered"] = {{"chi_square", render_fixed(s.chi_square, 3)},
                                  {"contingency_coefficient", render_fixed(s.contingency_coefficient, 3)},
                                  {"effect_size_w", render_fixed(s.effect_size_w, 3)}};
    } else {
        dependence["reason"] = document.dependence.reason;
    }
    out["dependence"] = std::move(dependence);

    json diverseness;
    diverseness["target"] = json::array();
    for (std::size_t t = 0; t < 2; ++t) {
        diverseness["target"].push_back(
            {{"level", tables.target_levels[t]},
             {"probability", tables.prior_target[t]},
             {"rendered", render_fixed(tables.prior_target[t], 3)},
             {"count", counted ? json(tables.target_counts[t]) : json(nullptr)}});
    }
    diverseness["protected"] = json::array();
    for (std::size_t a = 0; a < r; ++a) {
        diverseness["protected"].push_back(
            {{"level", tables.protected_levels[a]},
             {"probability", tables.prior_protected[a]},
             {"rendered", render_fixed(tables.prior_protected[a], 3)},
             {"count", counted ? json(tables.protected_counts[a]) : json(nullptr)}});
    }
    if (tables.normalization_warning) {
        diverseness["normalization_warning"] = {
            {"raw_sum", tables.normalization_warning->raw_sum},
            {"message", tables.normalization_warning->message}};
    } else {
        diverseness["normalization_warning"] = nullptr;
    }
    out["diverseness"] = std::move(diverseness);

    json cells = json::array();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            cells.push_back({{"protected", tables.protected_levels[a]},
                             {"target", tables.target_levels[t]},
                             {"probability", tables.joint[i]},
                             {"rendered", render_fixed(tables.joint[i], 3)},
                             {"support", counted ? json(tables.support[i]) : json(nullptr)}});
        }
    }
    out["inclusiveness"] = {{"cells", std::move(cells)}};

    json likelihood;
    likelihood["target_given_protected"] = json::array();
    likelihood["protected_given_target"] = json::array();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t t = 0; t < 2; ++t) {
            const std::size_t i = tables.at(a, t);
            likelihood["target_given_protected"].push_back(
                {{"target", tables.target_levels[t]},
                 {"protected", tables.protected_levels[a]},
                 {"probability", prob_or_null(tables.cond_target_given_protected[i])},
                 {"rendered", rendered(tables.cond_target_given_protected[i])}});
            likelihood["protected_given_target"].push_back(
                {{"protected", tables.protected_levels[a]},
                 {"target", tables.target_levels[t]},
                 {"probability", prob_or_null(tables.cond_protected_given_target[i])},
                 {"rendered", rendered(tables.cond_protected_given_target[i])}});
        }
    }
    out["training_likelihood"] = std::move(likelihood);

    json flags = json::array();
    for (const RiskFlag& flag : document.flags) {
        flags.push_back({{"kind", to_string(flag.kind)},
                         {"protected", flag.protected_level},
                         {"target", flag.target_level ? json(*flag.target_level) : json(nullptr)},
                         {"value", flag.value},
                         {"message", flag.message}});
    }
    out["flags"] = std::move(flags);
    out["warnings"] = document.warnings;

    return out.dump(2) + "\n";
}

AnnotationDocument parse_document(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& error) {
        raise(ErrorCode::InvalidArgument, std::string("document is not valid JSON: ") + error.what());
    }
    try {
        AnnotationDocument document;
        document.schema = in.at("schema").get<std::string>();
        if (document.schema != kReportSchema)
            raise(ErrorCode::InvalidArgument, "unsupported schema \"" + document.schema + "\"");

        const json& meta = in.at("meta");
        document.meta.name = meta.at("name").get<std::string>();
        document.meta.n_rows = meta.at("n_rows").get<std::size_t>();
        document.meta.source_kind = meta.at("source").get<std::string>();
        if (!meta.at("source_digest").is_null())
            document.meta.source_digest = meta.at("source_digest").get<std::string>();
        document.tool_version = meta.at("tool_version").get<std::string>();
        document.created_at = meta.at("created_at").get<std::string>();
        if (!meta.at("config").is_null()) document.meta.config = config_from_json(meta.at("config"));
        document.meta.thresholds.low_prior = meta.at("thresholds").at("low_prior").get<double>();
        document.meta.thresholds.high_skew = meta.at("thresholds").at("high_skew").get<double>();
        document.meta.target_semantics = meta.at("target_semantics").get<std::string>();

        const json& dependence = in.at("dependence");
        document.dependence.computable = dependence.at("computable").get<bool>();
        if (document.dependence.computable) {
            DependenceSummary& s = document.dependence.summary;
            s.chi_square = dependence.at("chi_square").get<double>();
            s.contingency_coefficient = dependence.at("contingency_coefficient").get<double>();
            s.effect_size_w = dependence.at("effect_size_w").get<double>();
            s.magnitude = classify_magnitude(s.effect_size_w);
        } else {
            document.dependence.reason = dependence.at("reason").get<std::string>();
        }

        ProbabilityTables& tables = document.tables;
        tables.has_counts = document.meta.source_kind == kSourceDelimitedFile;

        const json& diverseness = in.at("diverseness");
        for (std::size_t t = 0; t < 2; ++t) {
            const json& entry = diverseness.at("target").at(t);
            tables.prior_target[t] = entry.at("probability").get<double>();
            if (tables.has_counts) tables.target_counts[t] = entry.at("count").get<std::int64_t>();
        }
        for (const json& entry : diverseness.at("protected")) {
            tables.protected_levels.push_back(entry.at("level").get<std::string>());
            tables.prior_protected.push_back(entry.at("probability").get<double>());
            if (tables.has_counts)
                tables.protected_counts.push_back(entry.at("count").get<std::int64_t>());
        }
        if (!diverseness.at("normalization_warning").is_null()) {
            NormalizationWarning warning;
            warning.raw_sum = diverseness.at("normalization_warning").at("raw_sum").get<double>();
            warning.message = diverseness.at("normalization_warning").at("message").get<std::string>();
            tables.normalization_warning = std::move(warning);
        }

        const std::size_t r = tables.protected_levels.size();
        tables.joint.resize(r * 2);
        tables.cond_target_given_protected.resize(r * 2);
        tables.cond_protected_given_target.resize(r * 2);
        if (tables.has_counts) tables.support.resize(r * 2);

        const auto cell_index = [&](const json& entry) {
            const std::string level = entry.at("protected").get<std::string>();
            const std::string target = entry.at("target").get<std::string>();
            const auto it =
                std::find(tables.protected_levels.begin(), tables.protected_levels.end(), level);
            if (it == tables.protected_levels.end())
                raise(ErrorCode::InvalidArgument, "unknown protected level \"" + level + "\"");
            if (target != "0" && target != "1")
                raise(ErrorCode::InvalidArgument, "unknown target level \"" + target + "\"");
            return tables.at(std::size_t(it - tables.protected_levels.begin()), target == "1");
        };
        const auto parse_prob = [](const json& entry) {
            return entry.at("probability").is_null()
                       ? ProbValue::undefined()
                       : ProbValue{entry.at("probability").get<double>(), true};
        };

        for (const json& entry : in.at("inclusiveness").at("cells")) {
            const std::size_t i = cell_index(entry);
            tables.joint[i] = entry.at("probability").get<double>();
            if (tables.has_counts) tables.support[i] = entry.at("support").get<std::int64_t>();
        }
        for (const json& entry : in.at("training_likelihood").at("target_given_protected"))
            tables.cond_target_given_protected[cell_index(entry)] = parse_prob(entry);
        for (const json& entry : in.at("training_likelihood").at("protected_given_target"))
            tables.cond_protected_given_target[cell_index(entry)] = parse_prob(entry);

        if (tables.has_counts) {
            tables.n = std::int64_t(document.meta.n_rows);
        }

        for (const json& entry : in.at("flags")) {
            RiskFlag flag;
            const std::string kind = entry.at("kind").get<std::string>();
            if (kind == "zero-support") flag.kind = FlagKind::ZeroSupport;
            else if (kind == "low-prior") flag.kind = FlagKind::LowPrior;
            else if (kind == "high-skew") flag.kind = FlagKind::HighSkew;
            else raise(ErrorCode::InvalidArgument, "unknown flag kind \"" + kind + "\"");
            flag.protected_level = entry.at("protected").get<std::string>();
            if (!entry.at("target").is_null())
                flag.target_level = entry.at("target").get<std::string>();
            flag.value = entry.at("value").get<double>();
            flag.message = entry.at("message").get<std::string>();
            document.flags.push_back(std::move(flag));
        }
        document.warnings = in.at("warnings").get<std::vector<std::string>>();
        return document;
    } catch (const json::exception& error) {
        raise(ErrorCode::InvalidArgument, std::string("malformed document: ") + error.what());
    }
}

}  // namespace biasgauge
