/* biasgauge — C interface to the dataset bias-annotation library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions that can fail return bg_status; on failure, bg_last_error()
 * returns a thread-local human-readable message for the most recent error
 * on the calling thread. Strings returned through char** out-parameters are
 * heap-allocated and must be released with bg_string_free().
 */
#ifndef BIASGAUGE_H
#define BIASGAUGE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(BIASGAUGE_BUILD)
#define BIASGAUGE_API __declspec(dllexport)
#else
#define BIASGAUGE_API __declspec(dllimport)
#endif
#else
#define BIASGAUGE_API __attribute__((visibility("default")))
#endif

typedef enum bg_status {
    BG_OK = 0,
    BG_ERR_FILE_NOT_READABLE = 1,
    BG_ERR_COLUMN_NOT_FOUND = 2,
    BG_ERR_TARGET_NOT_BINARY = 3,
    BG_ERR_EMPTY_AFTER_FILTERING = 4,
    BG_ERR_DEGENERATE_TARGET = 5,
    BG_ERR_DEGENERATE_MARGINAL = 6,
    BG_ERR_NEGATIVE_PROBABILITY = 7,
    BG_ERR_ROW_NOT_NORMALIZED = 8,
    BG_ERR_UNKNOWN_FIXTURE = 9,
    BG_ERR_INVALID_ARGUMENT = 10,
    BG_ERR_IO = 11,
    BG_ERR_INTERNAL = 12
} bg_status;

typedef struct bg_config bg_config;
typedef struct bg_dataset bg_dataset;
typedef struct bg_document bg_document;

/* Library semantic version, e.g. "0.1.0". Static storage; do not free. */
BIASGAUGE_API const char* bg_version(void);

/* Stable identifier for a status value, e.g. "ColumnNotFound". */
BIASGAUGE_API const char* bg_status_name(bg_status status);

/* Message for the calling thread's most recent failure ("" if none). */
BIASGAUGE_API const char* bg_last_error(void);

/* ---- configuration ---- */

/* New config with defaults: positive label "1", drop-row policy, comma
 * delimiter, header row expected, thresholds 0.01 / 0.2. */
BIASGAUGE_API bg_config* bg_config_new(void);
BIASGAUGE_API void bg_config_free(bg_config* config);

/* Sets one entry; keys mirror the CLI flags and the config-file schema:
 * protected, target, positive, negative, missing-policy, delimiter, header,
 * low-prior-threshold, skew-threshold. */
BIASGAUGE_API bg_status bg_config_set(bg_config* config, const char* key, const char* value);

/* Applies every entry of a "key = value" file to the config. */
BIASGAUGE_API bg_status bg_config_apply_file(bg_config* config, const char* path);

/* ---- datasets ---- */

BIASGAUGE_API bg_status bg_load_dataset(const char* path, const bg_config* config,
                                        bg_dataset** out_dataset);
BIASGAUGE_API void bg_dataset_free(bg_dataset* dataset);

BIASGAUGE_API long long bg_dataset_rows(const bg_dataset* dataset);
BIASGAUGE_API long long bg_dataset_levels(const bg_dataset* dataset);

/* Borrowed pointer into the dataset; valid until bg_dataset_free. NULL when
 * the index is out of range. */
BIASGAUGE_API const char* bg_dataset_level(const bg_dataset* dataset, long long index);

/* Fills support[0] / support[1] with the per-target-level row counts;
 * BG_ERR_DEGENERATE_TARGET when either level has zero rows. */
BIASGAUGE_API bg_status bg_validate_target(const bg_dataset* dataset, long long support[2]);

/* ---- annotation documents ---- */

/* Runs the full audit; `name` labels the document and derived filenames. */
BIASGAUGE_API bg_status bg_annotate(const bg_dataset* dataset, const bg_config* config,
                                    const char* name, bg_document** out_document);

/* Runs a built-in specified-priors example; the only name is "motivating". */
BIASGAUGE_API bg_status bg_annotate_example(const char* name, bg_document** out_document);

BIASGAUGE_API void bg_document_free(bg_document* document);

/* Canonical JSON report (see docs/report_schema.md). */
BIASGAUGE_API bg_status bg_document_json(const bg_document* document, char** out_text);

/* Deterministic human-readable rendering of the same content. */
BIASGAUGE_API bg_status bg_document_text(const bg_document* document, char** out_text);

/* Writes `content` to `path` atomically (temp file + rename). */
BIASGAUGE_API bg_status bg_write_file(const char* path, const char* content);

/* Renders the four SVG badges into `dir` (created if needed). On success
 * *out_paths is a newline-joined list of the files written. */
BIASGAUGE_API bg_status bg_write_badges(const bg_document* document, const char* dir,
                                        char** out_paths);

BIASGAUGE_API void bg_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BIASGAUGE_H */
