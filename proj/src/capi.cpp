#include "biasgauge.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "biasgauge/annotation.hpp"
#include "biasgauge/config.hpp"
#include "biasgauge/dataset.hpp"
#include "biasgauge/error.hpp"
#include "biasgauge/render.hpp"

// The shared-library boundary: opaque handles around the C++ value types,
// error codes instead of exceptions, and a thread-local message buffer.

struct bg_config {
    biasgauge::AuditConfig config;
    biasgauge::FlagThresholds thresholds;
};

struct bg_dataset {
    biasgauge::Dataset dataset;
};

struct bg_document {
    biasgauge::AnnotationDocument document;
};

namespace {

thread_local std::string t_last_error;

bg_status status_from(biasgauge::ErrorCode code) {
    using biasgauge::ErrorCode;
    switch (code) {
        case ErrorCode::FileNotReadable: return BG_ERR_FILE_NOT_READABLE;
        case ErrorCode::ColumnNotFound: return BG_ERR_COLUMN_NOT_FOUND;
        case ErrorCode::TargetNotBinary: return BG_ERR_TARGET_NOT_BINARY;
        case ErrorCode::EmptyAfterFiltering: return BG_ERR_EMPTY_AFTER_FILTERING;
        case ErrorCode::DegenerateTarget: return BG_ERR_DEGENERATE_TARGET;
        case ErrorCode::DegenerateMarginal: return BG_ERR_DEGENERATE_MARGINAL;
        case ErrorCode::NegativeProbability: return BG_ERR_NEGATIVE_PROBABILITY;
        case ErrorCode::RowNotNormalized: return BG_ERR_ROW_NOT_NORMALIZED;
        case ErrorCode::UnknownFixture: return BG_ERR_UNKNOWN_FIXTURE;
        case ErrorCode::InvalidArgument: return BG_ERR_INVALID_ARGUMENT;
        case ErrorCode::IoError: return BG_ERR_IO;
    }
    return BG_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes + t_last_error.
template <typename F>
bg_status guarded(F&& body) {
    try {
        body();
        t_last_error.clear();
        return BG_OK;
    } catch (const biasgauge::Error& error) {
        t_last_error = error.what();
        return status_from(error.code());
    } catch (const std::exception& error) {
        t_last_error = error.what();
        return BG_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown internal failure";
        return BG_ERR_INTERNAL;
    }
}

bg_status fail_invalid(const char* message) {
    t_last_error = message;
    return BG_ERR_INVALID_ARGUMENT;
}

// malloc-backed copy so callers release with bg_string_free (plain free).
char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

bg_status emit_string(const std::string& text, char** out) {
    *out = copy_string(text);
    if (!*out) {
        t_last_error = "out of memory";
        return BG_ERR_INTERNAL;
    }
    return BG_OK;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        file << content;
        if (!file) biasgauge::raise(biasgauge::ErrorCode::IoError, "cannot write \"" + temp + "\"");
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec)
        biasgauge::raise(biasgauge::ErrorCode::IoError,
                         "cannot move \"" + temp + "\" to \"" + path + "\": " + ec.message());
}

}  // namespace

extern "C" {

const char* bg_version(void) { return biasgauge::kToolVersion; }

const char* bg_status_name(bg_status status) {
    switch (status) {
        case BG_OK: return "Ok";
        case BG_ERR_FILE_NOT_READABLE: return "FileNotReadable";
        case BG_ERR_COLUMN_NOT_FOUND: return "ColumnNotFound";
        case BG_ERR_TARGET_NOT_BINARY: return "TargetNotBinary";
        case BG_ERR_EMPTY_AFTER_FILTERING: return "EmptyAfterFiltering";
        case BG_ERR_DEGENERATE_TARGET: return "DegenerateTarget";
        case BG_ERR_DEGENERATE_MARGINAL: return "DegenerateMarginal";
        case BG_ERR_NEGATIVE_PROBABILITY: return "NegativeProbability";
        case BG_ERR_ROW_NOT_NORMALIZED: return "RowNotNormalized";
        case BG_ERR_UNKNOWN_FIXTURE: return "UnknownFixture";
        case BG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case BG_ERR_IO: return "IoError";
        case BG_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* bg_last_error(void) { return t_last_error.c_str(); }

bg_config* bg_config_new(void) { return new (std::nothrow) bg_config(); }

void bg_config_free(bg_config* config) { delete config; }

bg_status bg_config_set(bg_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return fail_invalid("config, key and value must be non-null");
    return guarded([&] {
        biasgauge::apply_config_entry(key, value, config->config, config->thresholds);
    });
}

bg_status bg_config_apply_file(bg_config* config, const char* path) {
    if (!config || !path) return fail_invalid("config and path must be non-null");
    return guarded([&] {
        std::ifstream file(path, std::ios::binary);
        if (!file)
            biasgauge::raise(biasgauge::ErrorCode::FileNotReadable,
                             std::string("cannot open config file \"") + path + "\"");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        for (const auto& [key, value] : biasgauge::parse_config_entries(buffer.str()))
            biasgauge::apply_config_entry(key, value, config->config, config->thresholds);
    });
}

bg_status bg_load_dataset(const char* path, const bg_config* config, bg_dataset** out_dataset) {
    if (!path || !config || !out_dataset)
        return fail_invalid("path, config and out_dataset must be non-null");
    *out_dataset = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<bg_dataset>();
        handle->dataset = biasgauge::load_dataset(path, config->config);
        *out_dataset = handle.release();
    });
}

void bg_dataset_free(bg_dataset* dataset) { delete dataset; }

long long bg_dataset_rows(const bg_dataset* dataset) {
    return dataset ? (long long)dataset->dataset.n_rows : 0;
}

long long bg_dataset_levels(const bg_dataset* dataset) {
    return dataset ? (long long)dataset->dataset.level_count() : 0;
}

const char* bg_dataset_level(const bg_dataset* dataset, long long index) {
    if (!dataset || index < 0 || std::size_t(index) >= dataset->dataset.level_count())
        return nullptr;
    return dataset->dataset.protected_levels[std::size_t(index)].c_str();
}

bg_status bg_validate_target(const bg_dataset* dataset, long long support[2]) {
    if (!dataset || !support) return fail_invalid("dataset and support must be non-null");
    return guarded([&] {
        const auto report = biasgauge::validate_binary_target(dataset->dataset);
        support[0] = report.support[0];
        support[1] = report.support[1];
    });
}

bg_status bg_annotate(const bg_dataset* dataset, const bg_config* config, const char* name,
                      bg_document** out_document) {
    if (!dataset || !config || !name || !out_document)
        return fail_invalid("dataset, config, name and out_document must be non-null");
    *out_document = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<bg_document>();
        handle->document =
            biasgauge::annotate(dataset->dataset, config->config, config->thresholds, name);
        *out_document = handle.release();
    });
}

bg_status bg_annotate_example(const char* name, bg_document** out_document) {
    if (!name || !out_document) return fail_invalid("name and out_document must be non-null");
    *out_document = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<bg_document>();
        handle->document = biasgauge::example_document(name);
        *out_document = handle.release();
    });
}

void bg_document_free(bg_document* document) { delete document; }

bg_status bg_document_json(const bg_document* document, char** out_text) {
    if (!document || !out_text) return fail_invalid("document and out_text must be non-null");
    *out_text = nullptr;
    std::string text;
    const bg_status status = guarded([&] { text = biasgauge::serialize(document->document); });
    return status != BG_OK ? status : emit_string(text, out_text);
}

bg_status bg_document_text(const bg_document* document, char** out_text) {
    if (!document || !out_text) return fail_invalid("document and out_text must be non-null");
    *out_text = nullptr;
    std::string text;
    const bg_status status = guarded([&] { text = biasgauge::render_text(document->document); });
    return status != BG_OK ? status : emit_string(text, out_text);
}

bg_status bg_write_file(const char* path, const char* content) {
    if (!path || !content) return fail_invalid("path and content must be non-null");
    return guarded([&] { write_file_atomic(path, content); });
}

bg_status bg_write_badges(const bg_document* document, const char* dir, char** out_paths) {
    if (!document || !dir || !out_paths)
        return fail_invalid("document, dir and out_paths must be non-null");
    *out_paths = nullptr;
    std::string joined;
    const bg_status status = guarded([&] {
        const auto paths =
            biasgauge::write_badges(biasgauge::render_badges(document->document), dir);
        for (const std::string& path : paths) {
            if (!joined.empty()) joined.push_back('\n');
            joined += path;
        }
    });
    return status != BG_OK ? status : emit_string(joined, out_paths);
}

void bg_string_free(char* text) { std::free(text); }

}  // extern "C"
