// biasgauge CLI: wires the shared-library C API to the command line.
//
// Exit codes: 0 success; 2 validation/configuration/data errors (one
// machine-readable JSON line on stderr); 3 output write failures; 4 internal
// errors. Scripts can rely on exit codes alone.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biasgauge.h"

namespace {

int exit_code_for(bg_status status) {
    switch (status) {
        case BG_OK: return 0;
        case BG_ERR_IO: return 3;
        case BG_ERR_INTERNAL: return 4;
        default: return 2; // every validation-class failure
    }
}

int report_error(bg_status status, const std::string& message) {
    nlohmann::ordered_json line;
    line["error"] = bg_status_name(status);
    line["message"] = message;
    std::cerr << line.dump() << "\n";
    return exit_code_for(status);
}

int report_error(bg_status status) { return report_error(status, bg_last_error()); }

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { bg_string_free(value); }
};

struct Options {
    std::string input;
    std::string example;
    std::string config_file;
    std::string out_dir = ".";
    std::string format = "json";
    bool badges = false;

    // Flag values; only applied when the user actually passed the flag, so
    // that a config file vs. flags precedence stays explicit (flags win).
    std::string protected_column, target_column, positive, negative, missing_policy, delimiter;
    std::string low_prior_threshold, skew_threshold;
    bool no_header = false;
};

// Literal path first; otherwise a bare file name is looked up under
// $BIASGAUGE_FIXTURES. Returns the path to load (existence is finally
// checked by the loader itself, which owns the FileNotReadable error).
std::string resolve_input(const std::string& input) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(input, ec)) return input;
    const char* fixtures = std::getenv("BIASGAUGE_FIXTURES");
    if (fixtures && *fixtures && input.find('/') == std::string::npos) {
        const fs::path candidate = fs::path(fixtures) / input;
        if (fs::exists(candidate, ec)) return candidate.string();
    }
    return input;
}

int run_annotate(const Options& options, const CLI::App& annotate) {
    if (options.input.empty() == options.example.empty())
        return report_error(BG_ERR_INVALID_ARGUMENT,
                            "exactly one input is required: an INPUT path or --example NAME");

    std::unique_ptr<bg_config, decltype(&bg_config_free)> config(bg_config_new(), bg_config_free);
    if (!config) return report_error(BG_ERR_INTERNAL, "out of memory");

    if (!options.config_file.empty()) {
        const bg_status status = bg_config_apply_file(config.get(), options.config_file.c_str());
        if (status != BG_OK) return report_error(status);
    }
    // Explicit flags override config-file entries.
    const auto set = [&](const char* flag, const char* key, const std::string& value) {
        if (annotate.count(flag) == 0) return BG_OK;
        return bg_config_set(config.get(), key, value.c_str());
    };
    const std::pair<const char*, std::pair<const char*, const std::string*>> string_flags[] = {
        {"--protected", {"protected", &options.protected_column}},
        {"--target", {"target", &options.target_column}},
        {"--positive", {"positive", &options.positive}},
        {"--negative", {"negative", &options.negative}},
        {"--missing-policy", {"missing-policy", &options.missing_policy}},
        {"--delimiter", {"delimiter", &options.delimiter}},
        {"--low-prior-threshold", {"low-prior-threshold", &options.low_prior_threshold}},
        {"--skew-threshold", {"skew-threshold", &options.skew_threshold}},
    };
    for (const auto& [flag, entry] : string_flags) {
        const bg_status status = set(flag, entry.first, *entry.second);
        if (status != BG_OK) return report_error(status);
    }
    if (annotate.count("--no-header") > 0) {
        const bg_status status = bg_config_set(config.get(), "header", "false");
        if (status != BG_OK) return report_error(status);
    }

    // Build the document, either from a dataset file or a built-in example.
    bg_document* document_raw = nullptr;
    std::string name;
    if (!options.example.empty()) {
        name = options.example;
        const bg_status status = bg_annotate_example(options.example.c_str(), &document_raw);
        if (status != BG_OK) return report_error(status);
    } else {
        const std::string path = resolve_input(options.input);
        name = std::filesystem::path(options.input).stem().string();

        bg_dataset* dataset_raw = nullptr;
        bg_status status = bg_load_dataset(path.c_str(), config.get(), &dataset_raw);
        if (status != BG_OK) return report_error(status);
        std::unique_ptr<bg_dataset, decltype(&bg_dataset_free)> dataset(dataset_raw,
                                                                        bg_dataset_free);
        long long support[2] = {0, 0};
        status = bg_validate_target(dataset.get(), support);
        if (status != BG_OK) return report_error(status);

        status = bg_annotate(dataset.get(), config.get(), name.c_str(), &document_raw);
        if (status != BG_OK) return report_error(status);
    }
    std::unique_ptr<bg_document, decltype(&bg_document_free)> document(document_raw,
                                                                       bg_document_free);

    // Serialize first; only a complete render is ever written out.
    StringGuard json_text;
    bg_status status = bg_document_json(document.get(), &json_text.value);
    if (status != BG_OK) return report_error(status);

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec)
        return report_error(BG_ERR_IO,
                            "cannot create output directory \"" + options.out_dir + "\": " + ec.message());

    const std::string extension = options.format == "text" ? ".annotation.txt" : ".annotation.json";
    const std::string report_path =
        (std::filesystem::path(options.out_dir) / (name + extension)).string();
    if (options.format == "text") {
        StringGuard text;
        status = bg_document_text(document.get(), &text.value);
        if (status != BG_OK) return report_error(status);
        status = bg_write_file(report_path.c_str(), text.value);
    } else {
        status = bg_write_file(report_path.c_str(), json_text.value);
    }
    if (status != BG_OK) return report_error(status);
    std::cout << "report: " << report_path << "\n";

    // Short human summary on stdout, read back from the canonical JSON.
    const auto parsed = nlohmann::json::parse(json_text.value);
    const auto& dependence = parsed.at("dependence");
    if (dependence.at("computable").get<bool>()) {
        std::cout << "dependence: " << dependence.at("magnitude").get<std::string>() << " (w = "
                  << dependence.at("rendered").at("effect_size_w").get<std::string>() << ", C = "
                  << dependence.at("rendered").at("contingency_coefficient").get<std::string>()
                  << ")\n";
    } else {
        std::cout << "dependence: not computable\n";
    }
    std::cout << "flags: " << parsed.at("flags").size() << "\n";
    std::cout << "warnings: " << parsed.at("warnings").size() << "\n";

    if (options.badges) {
        StringGuard paths;
        status = bg_write_badges(document.get(), options.out_dir.c_str(), &paths.value);
        if (status != BG_OK) return report_error(status);
        std::string line;
        for (const char* p = paths.value; *p; ++p) {
            if (*p == '\n') {
                std::cout << "badge: " << line << "\n";
                line.clear();
            } else {
                line.push_back(*p);
            }
        }
        if (!line.empty()) std::cout << "badge: " << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"annotate tabular datasets with discriminatory-risk statistics"};
    app.set_version_flag("--version", []() { return std::string(bg_version()); });

    Options options;
    CLI::App* annotate =
        app.add_subcommand("annotate", "audit one dataset and write the annotation report");
    annotate->add_option("INPUT", options.input,
                         "dataset path (or a file name under $BIASGAUGE_FIXTURES)");
    annotate->add_option("--example", options.example,
                         "run a built-in specified-priors example instead of a file");
    annotate->add_option("--config", options.config_file, "key=value config file");
    annotate->add_option("--protected", options.protected_column, "protected attribute column");
    annotate->add_option("--target", options.target_column, "binary target column");
    annotate->add_option("--positive", options.positive, "raw cell value mapped to target 1");
    annotate->add_option("--negative", options.negative,
                         "raw cell value mapped to target 0 (all non-positive cells when unset)");
    annotate->add_option("--missing-policy", options.missing_policy,
                         "drop-row (default) or as-category");
    annotate->add_option("--delimiter", options.delimiter, "field delimiter (default ',')");
    annotate->add_flag("--no-header", options.no_header, "first row is data, not a header");
    annotate->add_option("--out", options.out_dir, "output directory (default '.')");
    annotate->add_flag("--badges", options.badges, "also render the four SVG badges");
    annotate->add_option("--format", options.format, "report file format: json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    annotate->add_option("--low-prior-threshold", options.low_prior_threshold,
                         "prior below this raises a low-prior flag (default 0.01)")
        ->check(CLI::Range(0.0, 1.0));
    annotate->add_option("--skew-threshold", options.skew_threshold,
                         "|P(1|level) - P(1)| above this raises a high-skew flag (default 0.2)")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForVersion& version) {
        return app.exit(version);
    } catch (const CLI::ParseError& error) {
        return report_error(BG_ERR_INVALID_ARGUMENT, error.what());
    }

    if (annotate->parsed()) return run_annotate(options, *annotate);

    std::cout << app.help();
    return 2;
}
