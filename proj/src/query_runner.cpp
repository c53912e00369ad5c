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
#include "mavengraph/query_runner.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mavengraph/error.hpp"
#include "mavengraph/io.hpp"
#include "mavengraph/query.hpp"

namespace mavengraph {

namespace {

const QuerySpec* find_spec(std::string_view name) {
    for (const auto& s : query_specs()) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

void check_params(const QuerySpec& spec, const QueryParams& params) {
    for (const auto& [key, value] : params) {
        (void)value;
        const bool known = std::find(spec.required.begin(), spec.required.end(), key) != spec.required.end() ||
                           std::find(spec.optional.begin(), spec.optional.end(), key) != spec.optional.end();
        if (!known) {
            throw Error(ErrorCode::InvalidArgument,
                        "query " + std::string(spec.name) + " does not take parameter '" + key + "'");
        }
    }
    for (auto key : spec.required) {
        if (params.find(key) == params.end()) {
            throw Error(ErrorCode::InvalidArgument,
                        "query " + std::string(spec.name) + " requires parameter '" + std::string(key) + "'");
        }
    }
}

const std::string& param(const QueryParams& p, std::string_view key) { return p.find(key)->second; }

int parse_year(const std::string& text) {
    int year = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
    if (ec != std::errc() || end != text.data() + text.size() || text.size() != 4) {
        throw Error(ErrorCode::InvalidArgument, "year must be four digits: '" + text + "'");
    }
    return year;
}

class Table {
public:
    explicit Table(std::vector<std::string_view> header) { write_csv_row(out_, header); }

    void row(const std::vector<std::string>& fields) {
        std::vector<std::string_view> views(fields.begin(), fields.end());
        write_csv_row(out_, views);
    }

    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string coordinate_list(const std::vector<Coordinates>& list) {
    Table t({"coordinates"});
    for (const auto& c : list) t.row({c.str()});
    return t.str();
}

std::string neighbor_list(std::string_view column, const std::vector<Neighbor>& list) {
    Table t({column, "scope"});
    for (const auto& [c, s] : list) t.row({c.str(), std::string(scope_csv_name(s))});
    return t.str();
}

std::string optional_coordinates(const std::optional<Coordinates>& c) {
    Table t({"coordinates"});
    if (c) t.row({c->str()});
    return t.str();
}

}  // namespace

const std::vector<QuerySpec>& query_specs() {
    static const std::vector<QuerySpec> specs = {
        {"released-in", {"date"}, {}},
        {"dependents-in-year", {"library", "year"}, {"scope"}},
        {"versions-per-library", {}, {}},
        {"stale-dependents", {"library", "scope"}, {}},
        {"in-range", {"library", "range"}, {}},
        {"stats", {}, {}},
        {"percentiles", {}, {}},
        {"dependencies", {"artifact"}, {"scope"}},
        {"usages", {"artifact"}, {"scope"}},
        {"successor", {"artifact"}, {}},
        {"predecessor", {"artifact"}, {}},
    };
    return specs;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

std::string run_query(const DependencyGraph& g, std::string_view name, const QueryParams& p) {
    const QuerySpec* spec = find_spec(name);
    if (!spec) throw Error(ErrorCode::InvalidArgument, "unknown query '" + std::string(name) + "'");
    check_params(*spec, p);

    if (name == "released-in") {
        return coordinate_list(artifacts_released_in(g, CalendarKey::parse(param(p, "date"))));
    }
    std::optional<Scope> scope;
    if (auto it = p.find("scope"); it != p.end()) scope = scope_from_string(it->second);

    if (name == "dependents-in-year") {
        return coordinate_list(dependents_of_library_in_year(g, LibraryId::parse(param(p, "library")),
                                                             parse_year(param(p, "year")), scope));
    }
    if (name == "versions-per-library") {
        Table t({"library", "versions"});
        for (const auto& row : versions_per_library(g)) t.row({row.library.str(), std::to_string(row.versions)});
        return t.str();
    }
    if (name == "stale-dependents") {
        Table t({"artifact", "dependency"});
        for (const auto& [n, m] :
             stale_dependents(g, LibraryId::parse(param(p, "library")), *scope)) {
            t.row({n.str(), m.str()});
        }
        return t.str();
    }
    if (name == "in-range") {
        return coordinate_list(artifacts_in_version_range(g, LibraryId::parse(param(p, "library")), param(p, "range")));
    }
    if (name == "stats") {
        const GraphStats s = compute_stats(g);
        Table t({"metric", "value"});
        t.row({"artifacts", std::to_string(s.artifacts)});
        t.row({"libraries", std::to_string(s.libraries)});
        t.row({"groups", std::to_string(s.groups)});
        t.row({"upgrades", std::to_string(s.upgrades)});
        t.row({"dependencies", std::to_string(s.dep_edges)});
        t.row({"unresolved", std::to_string(s.unresolved)});
        t.row({"density", format_double(s.density())});
        return t.str();
    }
    if (name == "percentiles") {
        Table t({"metric", "p25", "p50", "p75", "min", "max"});
        for (const auto& r : compute_percentiles(g)) {
            t.row({std::string(metric_name(r.metric)), std::to_string(r.p25), std::to_string(r.p50),
                   std::to_string(r.p75), std::to_string(r.min), std::to_string(r.max)});
        }
        return t.str();
    }
    const Coordinates artifact = Coordinates::parse(param(p, "artifact"));
    if (name == "dependencies") return neighbor_list("target", g.dependencies_of(artifact, scope));
    if (name == "usages") return neighbor_list("source", g.usages_of(artifact, scope));
    if (name == "successor") return optional_coordinates(g.successor(artifact));
    return optional_coordinates(g.predecessor(artifact));
}

}  // namespace mavengraph
