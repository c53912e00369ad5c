/*
 * Copyright 2026 The mavengraph Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef MAVENGRAPH_H
#define MAVENGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MAVENGRAPH_BUILDING)
#define MG_API __attribute__((visibility("default")))
#else
#define MG_API
#endif

/* Every function returns MG_OK or a failure code. On failure the message for
 * the calling thread is available from mg_last_error_message() until the
 * next call on that thread. Output pointers are untouched on failure. */
typedef enum mg_status {
    MG_OK = 0,
    MG_MALFORMED_COORDINATES,
    MG_UNKNOWN_SCOPE,
    MG_EMPTY_VERSION,
    MG_MALFORMED_RANGE,
    MG_CORRUPT_POM,
    MG_SELF_DEPENDENCY,
    MG_UNKNOWN_ARTIFACT,
    MG_CHAINS_NOT_BUILT,
    MG_CONSUMER_BUSY,
    MG_SCHEMA_MISMATCH,
    MG_ROW_ERROR,
    MG_CHAIN_VIOLATION,
    MG_NONTERMINATION,
    MG_IO_ERROR,
    MG_INVALID_ARGUMENT,
    MG_INTERNAL_ERROR
} mg_status;

typedef struct mg_graph mg_graph;
typedef struct mg_string mg_string;

/* "Ok", "MalformedCoordinates", ... */
MG_API const char* mg_status_name(mg_status status);
MG_API const char* mg_last_error_message(void);

MG_API const char* mg_string_data(const mg_string* s);
MG_API size_t mg_string_size(const mg_string* s);
MG_API void mg_string_destroy(mg_string* s);

MG_API mg_status mg_graph_create(mg_graph** out);
MG_API void mg_graph_destroy(mg_graph* g);

/* inserted receives 1 for a new or upgraded artifact, 0 for a duplicate. May be NULL. */
MG_API mg_status mg_graph_insert_artifact(mg_graph* g, const char* coordinates, const char* packaging,
                                          int64_t release_timestamp, int* inserted);
MG_API mg_status mg_graph_insert_dependency(mg_graph* g, const char* source, const char* target,
                                            const char* scope);
MG_API mg_status mg_graph_build_next_chains(mg_graph* g);

typedef struct mg_stats {
    uint64_t artifacts;
    uint64_t libraries;
    uint64_t groups;
    uint64_t upgrades;
    uint64_t dependencies;
    uint64_t unresolved;
    double density;
} mg_stats;

MG_API mg_status mg_graph_stats(const mg_graph* g, mg_stats* out);

/* Runs a named query; parameters are parallel key/value arrays. The result is
 * CSV with a header row. Query names: released-in, dependents-in-year,
 * versions-per-library, stale-dependents, in-range, stats, percentiles,
 * dependencies, usages, successor, predecessor. */
MG_API mg_status mg_graph_query(const mg_graph* g, const char* name, const char* const* keys,
                                const char* const* values, size_t count, mg_string** out);

/* Snapshots and CSV files. renames map input header names to schema names. */
MG_API mg_status mg_graph_save_snapshot(const mg_graph* g, const char* dir);
MG_API mg_status mg_graph_load_snapshot(const char* dir, mg_graph** out);
MG_API mg_status mg_graph_export_csv(const mg_graph* g, const char* nodes_path, const char* edges_path);
MG_API mg_status mg_graph_import_csv(const char* nodes_path, const char* edges_path, const char* const* rename_from,
                                     const char* const* rename_to, size_t rename_count, mg_graph** out);

/* Builds a graph from a corpus directory. report (may be NULL) receives
 * key=value lines. */
MG_API mg_status mg_ingest_corpus(const char* corpus_dir, mg_graph** out, mg_string** report);

typedef struct mg_mine_options {
    size_t consumers;       /* 0 means 1 */
    uint64_t seed;          /* scheduler and fault placement */
    size_t crashes;         /* randomly placed consumer crashes */
    uint32_t max_deliveries; /* 0 means 10 */
    int random_schedule;    /* interleave consumers pseudo-randomly instead of round robin */
    int threaded;           /* real worker threads */
} mg_mine_options;

MG_API void mg_mine_options_init(mg_mine_options* options);

/* Drains an index file through the broker pipeline against a corpus directory. */
MG_API mg_status mg_mine(const char* index_path, const char* corpus_dir, const mg_mine_options* options,
                         mg_graph** out, mg_string** report);

/* result receives -1, 0 or 1. */
MG_API mg_status mg_version_compare(const char* a, const char* b, int* result);
MG_API mg_status mg_version_in_range(const char* version, const char* range, int* result);

#ifdef __cplusplus
}
#endif

#endif
