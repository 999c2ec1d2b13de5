#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace biasgauge {

// What to do with rows whose protected cell is empty. A missing *target* cell
// always drops the row: there is no outcome level to file it under.
enum class MissingPolicy { DropRow, AsCategory };

const char* to_string(MissingPolicy policy) noexcept;
std::optional<MissingPolicy> parse_missing_policy(std::string_view text) noexcept;

// Column and label configuration for one audit run.
struct AuditConfig {
    std::string protected_column;
    std::string target_column;
    std::string positive_label = "1";          // raw cell value mapped to target 1
    std::optional<std::string> negative_label; // if set, the only value mapped to 0
    MissingPolicy missing_policy = MissingPolicy::DropRow;
    char delimiter = ',';
    bool has_header = true;

    // Enforces the field invariants (distinct columns, distinct labels).
    void validate() const;

    friend bool operator==(const AuditConfig&, const AuditConfig&) = default;
};

// Cutoffs for the risk flags attached to a report. The underlying phenomena
// are qualitative; these defaults are documented in the README and
// overridable from the CLI and config file.
struct FlagThresholds {
    double low_prior = 0.01; // protected prior below this is flagged
    double high_skew = 0.2;  // |P(target=1|level) - P(target=1)| above this is flagged

    friend bool operator==(const FlagThresholds&, const FlagThresholds&) = default;
};

// Parses a "key = value" config file ('#' comments and blank lines ignored).
// Keys mirror the CLI flags: protected, target, positive, negative,
// missing-policy, delimiter, header, low-prior-threshold, skew-threshold.
// Unknown or duplicate keys are rejected.
std::map<std::string, std::string> parse_config_entries(const std::string& text);

// Applies one config entry to the given structs; throws InvalidArgument on
// unknown keys or unparseable values. Shared by the config-file loader and
// the CLI flag handling so both honour identical validation.
void apply_config_entry(const std::string& key, const std::string& value,
                        AuditConfig& config, FlagThresholds& thresholds);

}  // namespace biasgauge
