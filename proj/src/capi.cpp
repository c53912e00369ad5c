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
#include "mavengraph/mavengraph.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "mavengraph/error.hpp"
#include "mavengraph/io.hpp"
#include "mavengraph/miner.hpp"
#include "mavengraph/query.hpp"
#include "mavengraph/query_runner.hpp"
#include "mavengraph/version.hpp"

struct mg_graph {
    mavengraph::DependencyGraph graph;
};

struct mg_string {
    std::string text;
};

namespace {

using namespace mavengraph;

thread_local std::string last_error;

constexpr mg_status status_of(ErrorCode code) { return static_cast<mg_status>(static_cast<int>(code) + 1); }

static_assert(status_of(ErrorCode::MalformedCoordinates) == MG_MALFORMED_COORDINATES);
static_assert(status_of(ErrorCode::InvalidArgument) == MG_INVALID_ARGUMENT);

mg_status fail(mg_status status, const char* message) {
    last_error = message;
    return status;
}

template <class Fn>
mg_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        fn();
        return MG_OK;
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MG_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(MG_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(MG_INTERNAL_ERROR, "unknown failure");
    }
}

void require(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

mg_string* make_string(std::string text) { return new mg_string{std::move(text)}; }

void open_out(std::ofstream& f, const char* path) {
    f.open(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoError, std::string("cannot write ") + path);
}

void open_in(std::ifstream& f, const char* path) {
    f.open(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoError, std::string("cannot read ") + path);
}

}  // namespace

extern "C" {

const char* mg_status_name(mg_status status) {
    static const std::string names[] = {
        "Ok",
        std::string(error_name(ErrorCode::MalformedCoordinates)),
        std::string(error_name(ErrorCode::UnknownScope)),
        std::string(error_name(ErrorCode::EmptyVersion)),
        std::string(error_name(ErrorCode::MalformedRange)),
        std::string(error_name(ErrorCode::CorruptPom)),
        std::string(error_name(ErrorCode::SelfDependency)),
        std::string(error_name(ErrorCode::UnknownArtifact)),
        std::string(error_name(ErrorCode::ChainsNotBuilt)),
        std::string(error_name(ErrorCode::ConsumerBusy)),
        std::string(error_name(ErrorCode::SchemaMismatch)),
        std::string(error_name(ErrorCode::RowError)),
        std::string(error_name(ErrorCode::ChainViolation)),
        std::string(error_name(ErrorCode::Nontermination)),
        std::string(error_name(ErrorCode::IoError)),
        std::string(error_name(ErrorCode::InvalidArgument)),
        "InternalError",
    };
    const int i = static_cast<int>(status);
    if (i < 0 || i > MG_INTERNAL_ERROR) return "Unknown";
    return names[i].c_str();
}

const char* mg_last_error_message(void) { return last_error.c_str(); }

const char* mg_string_data(const mg_string* s) { return s ? s->text.c_str() : ""; }
size_t mg_string_size(const mg_string* s) { return s ? s->text.size() : 0; }
void mg_string_destroy(mg_string* s) { delete s; }

mg_status mg_graph_create(mg_graph** out) {
    return guarded([&] {
        require(out, "out");
        *out = new mg_graph{};
    });
}

void mg_graph_destroy(mg_graph* g) { delete g; }

mg_status mg_graph_insert_artifact(mg_graph* g, const char* coordinates, const char* packaging,
                                   int64_t release_timestamp, int* inserted) {
    return guarded([&] {
        require(g, "graph");
        require(coordinates, "coordinates");
        ArtifactRecord record(Coordinates::parse(coordinates), Packaging::parse(packaging ? packaging : ""),
                              release_timestamp);
        const bool added = g->graph.insert_artifact(record);
        if (inserted) *inserted = added ? 1 : 0;
    });
}

mg_status mg_graph_insert_dependency(mg_graph* g, const char* source, const char* target, const char* scope) {
    return guarded([&] {
        require(g, "graph");
        require(source, "source");
        require(target, "target");
        require(scope, "scope");
        g->graph.insert_dependency(Coordinates::parse(source), Coordinates::parse(target), scope_from_string(scope));
    });
}

mg_status mg_graph_build_next_chains(mg_graph* g) {
    return guarded([&] {
        require(g, "graph");
        g->graph.build_next_chains();
    });
}

mg_status mg_graph_stats(const mg_graph* g, mg_stats* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        const GraphStats s = compute_stats(g->graph);
        *out = mg_stats{s.artifacts, s.libraries, s.groups, s.upgrades, s.dep_edges, s.unresolved, s.density()};
    });
}

mg_status mg_graph_query(const mg_graph* g, const char* name, const char* const* keys, const char* const* values,
                         size_t count, mg_string** out) {
    return guarded([&] {
        require(g, "graph");
        require(name, "name");
        require(out, "out");
        if (count > 0) {
            require(keys, "keys");
            require(values, "values");
        }
        QueryParams params;
        for (size_t i = 0; i < count; ++i) {
            require(keys[i], "key");
            require(values[i], "value");
            if (!params.emplace(keys[i], values[i]).second) {
                throw Error(ErrorCode::InvalidArgument, std::string("parameter given twice: ") + keys[i]);
            }
        }
        *out = make_string(run_query(g->graph, name, params));
    });
}

mg_status mg_graph_save_snapshot(const mg_graph* g, const char* dir) {
    return guarded([&] {
        require(g, "graph");
        require(dir, "dir");
        save_snapshot(g->graph, dir);
    });
}

mg_status mg_graph_load_snapshot(const char* dir, mg_graph** out) {
    return guarded([&] {
        require(dir, "dir");
        require(out, "out");
        *out = new mg_graph{load_snapshot(dir)};
    });
}

mg_status mg_graph_export_csv(const mg_graph* g, const char* nodes_path, const char* edges_path) {
    return guarded([&] {
        require(g, "graph");
        require(nodes_path, "nodes path");
        require(edges_path, "edges path");
        // Export into memory first so a failed export leaves no half-written files.
        std::ostringstream nodes, edges;
        export_csv(g->graph, nodes, edges);
        std::ofstream nf, ef;
        open_out(nf, nodes_path);
        open_out(ef, edges_path);
        nf << nodes.str();
        ef << edges.str();
        nf.close();
        ef.close();
        if (!nf || !ef) throw Error(ErrorCode::IoError, "write failed");
    });
}

mg_status mg_graph_import_csv(const char* nodes_path, const char* edges_path, const char* const* rename_from,
                              const char* const* rename_to, size_t rename_count, mg_graph** out) {
    return guarded([&] {
        require(nodes_path, "nodes path");
        require(edges_path, "edges path");
        require(out, "out");
        HeaderRenames renames;
        if (rename_count > 0) {
            require(rename_from, "rename_from");
            require(rename_to, "rename_to");
        }
        for (size_t i = 0; i < rename_count; ++i) {
            require(rename_from[i], "rename source");
            require(rename_to[i], "rename target");
            renames[rename_from[i]] = rename_to[i];
        }
        std::ifstream nf, ef;
        open_in(nf, nodes_path);
        open_in(ef, edges_path);
        *out = new mg_graph{import_csv(nf, ef, renames)};
    });
}

mg_status mg_ingest_corpus(const char* corpus_dir, mg_graph** out, mg_string** report) {
    return guarded([&] {
        require(corpus_dir, "corpus dir");
        require(out, "out");
        IngestResult result = ingest_corpus(corpus_dir);
        std::ostringstream text;
        write_report(text, result);
        auto* g = new mg_graph{std::move(result.graph)};
        if (report) *report = make_string(text.str());
        *out = g;
    });
}

void mg_mine_options_init(mg_mine_options* options) {
    if (options) *options = mg_mine_options{1, 0, 0, 10, 0, 0};
}

mg_status mg_mine(const char* index_path, const char* corpus_dir, const mg_mine_options* options, mg_graph** out,
                  mg_string** report) {
    return guarded([&] {
        require(index_path, "index path");
        require(corpus_dir, "corpus dir");
        require(out, "out");
        mg_mine_options o;
        mg_mine_options_init(&o);
        if (options) o = *options;

        if (!std::filesystem::is_directory(corpus_dir)) {
            throw Error(ErrorCode::IoError, std::string("not a directory: ") + corpus_dir);
        }
        std::ifstream in;
        open_in(in, index_path);
        const std::vector<Coordinates> index = read_index(in);

        PipelineOptions po;
        po.consumers = o.consumers == 0 ? 1 : o.consumers;
        po.seed = o.seed;
        po.schedule = o.random_schedule ? Schedule::SeededRandom : Schedule::RoundRobin;
        po.max_deliveries = o.max_deliveries == 0 ? 10 : o.max_deliveries;
        po.threaded = o.threaded != 0;
        if (o.crashes > 0) {
            // Place crashes among the deliveries each consumer can expect to see.
            const std::size_t share = (index.size() + po.consumers - 1) / po.consumers;
            const std::size_t room = (o.crashes + po.consumers - 1) / po.consumers;
            po.faults = FaultPlan::random(o.seed, po.consumers, o.crashes, std::max<std::size_t>({share, room, 1}));
        }
        PipelineResult result = run_pipeline(index, CorpusSource(corpus_dir), po);
        std::ostringstream text;
        write_report(text, result.report);
        auto* g = new mg_graph{std::move(result.graph)};
        if (report) *report = make_string(text.str());
        *out = g;
    });
}

mg_status mg_version_compare(const char* a, const char* b, int* result) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(result, "result");
        const auto c = compare(parse_version(a), parse_version(b));
        *result = c < 0 ? -1 : (c > 0 ? 1 : 0);
    });
}

mg_status mg_version_in_range(const char* version, const char* range, int* result) {
    return guarded([&] {
        require(version, "version");
        require(range, "range");
        require(result, "result");
        *result = matches_range(parse_version(version), range) ? 1 : 0;
    });
}

}  // extern "C"
