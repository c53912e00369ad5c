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
#include "mavengraph/query.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mavengraph/error.hpp"

namespace mavengraph {

namespace {

void require_chains(const DependencyGraph& g) {
    if (!g.chains_current()) {
        throw Error(ErrorCode::ChainsNotBuilt, "NEXT chains have not been built for the current graph");
    }
}

struct VersionSpan {
    const VersionTokens* oldest = nullptr;
    const VersionTokens* newest = nullptr;
};

// Oldest and newest version of lib that `node` depends on with `scope`.
class SpanCache {
public:
    SpanCache(const DependencyGraph& g, const LibraryId& lib, Scope scope) : g_(g), lib_(lib), scope_(scope) {}

    const VersionSpan& of(const Coordinates& node) {
        auto it = cache_.find(node);
        if (it != cache_.end()) return it->second;
        VersionSpan span;
        if (auto out = g_.out_edges().find(node); out != g_.out_edges().end()) {
            for (const auto& [target, scope] : out->second) {
                if (scope != scope_ || target.library() != lib_) continue;
                const VersionTokens& v = parsed(target);
                if (span.oldest == nullptr || compare(v, *span.oldest) < 0) span.oldest = &v;
                if (span.newest == nullptr || compare(v, *span.newest) > 0) span.newest = &v;
            }
        }
        return cache_.emplace(node, span).first->second;
    }

private:
    const VersionTokens& parsed(const Coordinates& c) {
        auto it = versions_.find(c);
        if (it == versions_.end()) it = versions_.emplace(c, parse_version(c.version())).first;
        return it->second;
    }

    const DependencyGraph& g_;
    const LibraryId& lib_;
    Scope scope_;
    std::map<Coordinates, VersionSpan> cache_;
    std::map<Coordinates, VersionTokens> versions_;
};

}  // namespace

std::string_view metric_name(Metric m) noexcept {
    switch (m) {
        case Metric::Dependencies: return "Dependencies";
        case Metric::Usages: return "Usages";
        case Metric::Versions: return "Versions";
    }
    return "?";
}

std::vector<Coordinates> artifacts_released_in(const DependencyGraph& g, const CalendarKey& key) {
    const auto& hits = g.released_in(key);
    return {hits.begin(), hits.end()};
}

std::vector<Coordinates> dependents_of_library_in_year(const DependencyGraph& g, const LibraryId& lib, int year,
                                                       std::optional<Scope> scope) {
    std::vector<Coordinates> out;
    for (const auto& c : g.released_in(CalendarKey(year))) {
        auto edges = g.out_edges().find(c);
        if (edges == g.out_edges().end()) continue;
        const bool uses = std::any_of(edges->second.begin(), edges->second.end(), [&](const Neighbor& n) {
            return n.first.library() == lib && (!scope || n.second == *scope);
        });
        if (uses) out.push_back(c);
    }
    return out;
}

std::vector<LibraryVersionCount> versions_per_library(const DependencyGraph& g) {
    require_chains(g);
    std::map<LibraryId, std::size_t> counts;
    const auto& next = g.next_edges();
    for (const auto& [c, node] : g.nodes()) {
        if (!node.resolved() || g.predecessor(c)) continue;
        std::size_t length = 1;
        for (auto it = next.find(c); it != next.end(); it = next.find(it->second)) ++length;
        counts[c.library()] += length;
    }
    std::vector<LibraryVersionCount> out;
    out.reserve(counts.size());
    for (auto& [lib, n] : counts) out.push_back({lib, n});
    return out;
}

std::vector<std::pair<Coordinates, Coordinates>> stale_dependents(const DependencyGraph& g, const LibraryId& lib,
                                                                 Scope scope) {
    SpanCache spans(g, lib, scope);
    std::vector<std::pair<Coordinates, Coordinates>> out;
    for (const auto& [n, edges] : g.out_edges()) {
        const VersionSpan& j1 = spans.of(n);
        if (j1.oldest == nullptr) continue;
        const Coordinates* last = nullptr;
        for (const auto& [m, any_scope] : edges) {
            if (last != nullptr && *last == m) continue;
            last = &m;
            const VersionSpan& j2 = spans.of(m);
            if (j2.newest != nullptr && compare(*j1.oldest, *j2.newest) < 0) out.emplace_back(n, m);
        }
    }
    return out;
}

std::vector<Coordinates> artifacts_in_version_range(const DependencyGraph& g, const LibraryId& lib,
                                                    std::string_view range) {
    const VersionRange parsed = VersionRange::parse(range);
    std::vector<const ArtifactRecord*> hits;
    if (auto it = g.library_index().find(lib); it != g.library_index().end()) {
        for (const auto& c : it->second) {
            const ArtifactRecord* rec = g.find(c);
            if (parsed.contains(rec->parsed_version())) hits.push_back(rec);
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const ArtifactRecord* a, const ArtifactRecord* b) { return next_chain_less(*a, *b); });
    std::vector<Coordinates> out;
    out.reserve(hits.size());
    for (const auto* rec : hits) out.push_back(rec->coordinates());
    return out;
}

GraphStats compute_stats(const DependencyGraph& g) {
    require_chains(g);
    GraphStats s;
    s.artifacts = g.resolved_count();
    s.libraries = g.library_index().size();
    std::set<std::string_view> groups;
    for (const auto& [lib, members] : g.library_index()) groups.insert(lib.group_id);
    s.groups = groups.size();
    s.upgrades = g.next_edge_count();
    s.dep_edges = g.dependency_edge_count();
    s.unresolved = g.placeholder_count();
    return s;
}

PercentileRow percentile_row(Metric metric, std::vector<std::int64_t> values) {
    PercentileRow row;
    row.metric = metric;
    if (values.empty()) return row;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    auto rank = [&](std::size_t p) {
        const std::size_t r = (p * n + 99) / 100;
        return values[std::max<std::size_t>(r, 1) - 1];
    };
    row.p25 = rank(25);
    row.p50 = rank(50);
    row.p75 = rank(75);
    row.min = values.front();
    row.max = values.back();
    return row;
}

std::array<PercentileRow, 3> compute_percentiles(const DependencyGraph& g) {
    require_chains(g);
    std::vector<std::int64_t> deps;
    std::vector<std::int64_t> uses;
    deps.reserve(g.resolved_count());
    uses.reserve(g.resolved_count());
    for (const auto& [c, node] : g.nodes()) {
        if (!node.resolved()) continue;
        deps.push_back(static_cast<std::int64_t>(g.out_degree(c)));
        uses.push_back(static_cast<std::int64_t>(g.in_degree(c)));
    }
    std::vector<std::int64_t> versions;
    for (const auto& row : versions_per_library(g)) versions.push_back(static_cast<std::int64_t>(row.versions));
    return {percentile_row(Metric::Dependencies, std::move(deps)), percentile_row(Metric::Usages, std::move(uses)),
            percentile_row(Metric::Versions, std::move(versions))};
}

}  // namespace mavengraph
