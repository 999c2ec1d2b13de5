#include "biasgauge/config.hpp"

#include <cstdlib>

#include "biasgauge/error.hpp"

namespace biasgauge {

const char* to_string(MissingPolicy policy) noexcept {
    return policy == MissingPolicy::DropRow ? "drop-row" : "as-category";
}

std::optional<MissingPolicy> parse_missing_policy(std::string_view text) noexcept {
    if (text == "drop-row") return MissingPolicy::DropRow;
    if (text == "as-category") return MissingPolicy::AsCategory;
    return std::nullopt;
}

void AuditConfig::validate() const {
    if (protected_column.empty())
        raise(ErrorCode::InvalidArgument, "protected column name must not be empty");
    if (target_column.empty())
        raise(ErrorCode::InvalidArgument, "target column name must not be empty");
    if (protected_column == target_column)
        raise(ErrorCode::InvalidArgument,
              "protected and target must be different columns (both are \"" + protected_column + "\")");
    if (positive_label.empty())
        raise(ErrorCode::InvalidArgument, "positive label must not be empty");
    if (negative_label && *negative_label == positive_label)
        raise(ErrorCode::InvalidArgument,
              "positive and negative labels must differ (both are \"" + positive_label + "\")");
}

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

double parse_threshold(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || parsed < 0.0 || parsed > 1.0)
        raise(ErrorCode::InvalidArgument,
              "value for \"" + key + "\" must be a number in [0,1], got \"" + value + "\"");
    return parsed;
}

}  // namespace

std::map<std::string, std::string> parse_config_entries(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::size_t line_start = 0;
    int line_number = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        const std::string line = text.substr(line_start, line_end - line_start);
        line_start = line_end + 1;
        ++line_number;

        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            raise(ErrorCode::InvalidArgument,
                  "config line " + std::to_string(line_number) + " is not \"key = value\": " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            raise(ErrorCode::InvalidArgument,
                  "config line " + std::to_string(line_number) + " has an empty key");
        if (!entries.emplace(key, value).second)
            raise(ErrorCode::InvalidArgument, "duplicate config key \"" + key + "\"");
    }
    return entries;
}

void apply_config_entry(const std::string& key, const std::string& value,
                        AuditConfig& config, FlagThresholds& thresholds) {
    if (key == "protected") {
        config.protected_column = value;
    } else if (key == "target") {
        config.target_column = value;
    } else if (key == "positive") {
        config.positive_label = value;
    } else if (key == "negative") {
        config.negative_label = value;
    } else if (key == "missing-policy") {
        const auto policy = parse_missing_policy(value);
        if (!policy)
            raise(ErrorCode::InvalidArgument,
                  "missing-policy must be drop-row or as-category, got \"" + value + "\"");
        config.missing_policy = *policy;
    } else if (key == "delimiter") {
        std::string delim = value;
        if (delim == "\\t") delim = "\t"; // allow escaped tab in config files and flags
        if (delim.size() != 1)
            raise(ErrorCode::InvalidArgument,
                  "delimiter must be a single character, got \"" + value + "\"");
        config.delimiter = delim.front();
    } else if (key == "header") {
        if (value == "true" || value == "yes" || value == "1") config.has_header = true;
        else if (value == "false" || value == "no" || value == "0") config.has_header = false;
        else raise(ErrorCode::InvalidArgument, "header must be true or false, got \"" + value + "\"");
    } else if (key == "low-prior-threshold") {
        thresholds.low_prior = parse_threshold(key, value);
    } else if (key == "skew-threshold") {
        thresholds.high_skew = parse_threshold(key, value);
    } else {
        raise(ErrorCode::InvalidArgument, "unknown config key \"" + key + "\"");
    }
}

}  // namespace biasgauge
