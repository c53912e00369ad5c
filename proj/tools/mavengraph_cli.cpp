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
// mavengraph: build, mine and query Maven dependency graph snapshots.

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mavengraph/mavengraph.h"

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct GraphDeleter {
    void operator()(mg_graph* g) const { mg_graph_destroy(g); }
};
struct StringDeleter {
    void operator()(mg_string* s) const { mg_string_destroy(s); }
};
using Graph = std::unique_ptr<mg_graph, GraphDeleter>;
using String = std::unique_ptr<mg_string, StringDeleter>;

// Carries a failed status out of a command.
struct Failure {
    mg_status status;
};

void check(mg_status status) {
    if (status != MG_OK) throw Failure{status};
}

void print(const mg_string* s) { std::fwrite(mg_string_data(s), 1, mg_string_size(s), stdout); }

Graph load(const std::string& snapshot) {
    mg_graph* g = nullptr;
    check(mg_graph_load_snapshot(snapshot.c_str(), &g));
    return Graph(g);
}

void save(const mg_graph* g, const std::string& snapshot) { check(mg_graph_save_snapshot(g, snapshot.c_str())); }

String run_query(const mg_graph* g, const std::string& name, const std::map<std::string, std::string>& params) {
    std::vector<const char*> keys, values;
    for (const auto& [k, v] : params) {
        keys.push_back(k.c_str());
        values.push_back(v.c_str());
    }
    mg_string* out = nullptr;
    check(mg_graph_query(g, name.c_str(), keys.data(), values.data(), keys.size(), &out));
    return String(out);
}

const std::vector<std::string> kQueries = {
    "released-in", "dependents-in-year", "versions-per-library", "stale-dependents",
    "in-range",    "stats",              "percentiles",          "dependencies",
    "usages",      "successor",          "predecessor",
};

const std::vector<std::string> kQueryParams = {"date", "library", "year", "scope", "range", "artifact"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build, mine and query Maven dependency graph snapshots."};
    app.require_subcommand(1);

    std::string corpus, snapshot, index, nodes_csv, edges_csv, query_name;

    auto* ingest = app.add_subcommand("ingest", "Load every artifact of a corpus directory into a snapshot");
    ingest->add_option("corpus-dir", corpus)->required()->check(CLI::ExistingDirectory);
    ingest->add_option("out-snapshot", snapshot)->required();

    mg_mine_options mine_opts;
    mg_mine_options_init(&mine_opts);
    bool random_schedule = false, threaded = false;
    auto* mine = app.add_subcommand("mine", "Drain an index file through the broker pipeline");
    mine->add_option("index-file", index)->required()->check(CLI::ExistingFile);
    mine->add_option("corpus-dir", corpus)->required()->check(CLI::ExistingDirectory);
    mine->add_option("out-snapshot", snapshot)->required();
    mine->add_option("--consumers", mine_opts.consumers, "Number of consumers")->check(CLI::PositiveNumber);
    mine->add_option("--fault-seed", mine_opts.seed, "Seed for crash placement and the random schedule");
    mine->add_option("--crashes", mine_opts.crashes, "Consumer crashes to inject");
    mine->add_option("--max-deliveries", mine_opts.max_deliveries, "Redelivery limit per message")
        ->check(CLI::PositiveNumber);
    mine->add_flag("--random-schedule", random_schedule, "Interleave consumers pseudo-randomly");
    mine->add_flag("--threads", threaded, "Run consumers as worker threads");

    std::map<std::string, std::string> params;
    auto* query = app.add_subcommand("query", "Run a named query and print CSV");
    query->add_option("snapshot", snapshot)->required()->check(CLI::ExistingDirectory);
    query->add_option("query-name", query_name)->required()->check(CLI::IsMember(kQueries));
    for (const auto& key : kQueryParams) {
        query->add_option_function<std::string>(
            "--" + key, [&params, key](const std::string& v) { params[key] = v; }, "Query parameter " + key);
    }

    auto* stats = app.add_subcommand("stats", "Print graph statistics as CSV");
    stats->add_option("snapshot", snapshot)->required()->check(CLI::ExistingDirectory);

    auto* exp = app.add_subcommand("export", "Write a snapshot as node and edge CSV files");
    exp->add_option("snapshot", snapshot)->required()->check(CLI::ExistingDirectory);
    exp->add_option("nodes-csv", nodes_csv)->required();
    exp->add_option("edges-csv", edges_csv)->required();

    std::vector<std::string> renames;
    auto* imp = app.add_subcommand("import", "Read node and edge CSV files into a snapshot");
    imp->add_option("nodes-csv", nodes_csv)->required()->check(CLI::ExistingFile);
    imp->add_option("edges-csv", edges_csv)->required()->check(CLI::ExistingFile);
    imp->add_option("out-snapshot", snapshot)->required();
    imp->add_option("--rename", renames, "Header rename FROM=TO; repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (ingest->parsed()) {
            mg_graph* g = nullptr;
            mg_string* report = nullptr;
            check(mg_ingest_corpus(corpus.c_str(), &g, &report));
            Graph graph(g);
            String text(report);
            save(graph.get(), snapshot);
            print(text.get());
        } else if (mine->parsed()) {
            mine_opts.random_schedule = random_schedule ? 1 : 0;
            mine_opts.threaded = threaded ? 1 : 0;
            mg_graph* g = nullptr;
            mg_string* report = nullptr;
            check(mg_mine(index.c_str(), corpus.c_str(), &mine_opts, &g, &report));
            Graph graph(g);
            String text(report);
            save(graph.get(), snapshot);
            print(text.get());
        } else if (query->parsed()) {
            Graph graph = load(snapshot);
            try {
                print(run_query(graph.get(), query_name, params).get());
            } catch (const Failure& f) {
                // A parameter the query does not take, or one it needs but lacks, is a usage error.
                if (f.status != MG_INVALID_ARGUMENT) throw;
                std::fprintf(stderr, "%s: %s\n", mg_status_name(f.status), mg_last_error_message());
                return kUsageError;
            }
        } else if (stats->parsed()) {
            Graph graph = load(snapshot);
            print(run_query(graph.get(), "stats", {}).get());
        } else if (exp->parsed()) {
            Graph graph = load(snapshot);
            check(mg_graph_export_csv(graph.get(), nodes_csv.c_str(), edges_csv.c_str()));
        } else if (imp->parsed()) {
            std::vector<std::string> from, to;
            for (const auto& r : renames) {
                const auto eq = r.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == r.size()) {
                    std::fprintf(stderr, "--rename expects FROM=TO, got '%s'\n", r.c_str());
                    return kUsageError;
                }
                from.push_back(r.substr(0, eq));
                to.push_back(r.substr(eq + 1));
            }
            std::vector<const char*> f, t;
            for (std::size_t i = 0; i < from.size(); ++i) {
                f.push_back(from[i].c_str());
                t.push_back(to[i].c_str());
            }
            mg_graph* g = nullptr;
            check(mg_graph_import_csv(nodes_csv.c_str(), edges_csv.c_str(), f.data(), t.data(), f.size(), &g));
            Graph graph(g);
            save(graph.get(), snapshot);
        }
    } catch (const Failure& f) {
        std::fprintf(stderr, "%s: %s\n", mg_status_name(f.status), mg_last_error_message());
        return kDomainError;
    }
    return std::fflush(stdout) == 0 ? 0 : kDomainError;
}
