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
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mavengraph/model.hpp"

namespace mavengraph {

struct InsertReport {
    std::size_t inserted = 0;
    std::size_t duplicates_skipped = 0;
    std::size_t dangling_edges = 0;  // edges whose target is an unresolved placeholder
};

// A node is either a resolved artifact or a placeholder created for a
// dependency target that has no metadata.
struct GraphNode {
    Coordinates coordinates;
    std::optional<ArtifactRecord> record;

    bool resolved() const noexcept { return record.has_value(); }
    bool operator==(const GraphNode&) const = default;
};

using Neighbor = std::pair<Coordinates, Scope>;

// In-memory artifact graph keyed by coordinates. Mutations need exclusive
// access; const members may run concurrently between mutations.
class DependencyGraph {
public:
    // First write wins. Returns false and counts a duplicate when the
    // coordinates are already resolved; a placeholder is upgraded in place.
    bool insert_artifact(const ArtifactRecord& record);

    // Throws Error(SelfDependency) when source == target and
    // Error(UnknownArtifact) when source is not a resolved node. An absent
    // target becomes a placeholder. Inserting an existing edge is a no-op.
    void insert_dependency(const Coordinates& source, const Coordinates& target, Scope scope);

    // Rebuilds every NEXT chain from version order and returns the number of
    // NEXT edges.
    std::size_t build_next_chains();

    // Installs the given NEXT edges verbatim, replacing existing chains.
    // Throws Error(ChainViolation) unless they form vertex-disjoint simple
    // paths between resolved versions of one library each.
    void load_next_chains(const std::vector<std::pair<Coordinates, Coordinates>>& edges);

    // Cleared by inserting a new resolved artifact.
    bool chains_current() const noexcept { return chains_current_; }

    bool contains(const Coordinates& c) const { return nodes_.count(c) != 0; }
    bool is_resolved(const Coordinates& c) const;
    const ArtifactRecord* find(const Coordinates& c) const;

    // Ordered by (neighbor coordinates, scope). Throw Error(UnknownArtifact).
    std::vector<Neighbor> dependencies_of(const Coordinates& c, std::optional<Scope> scope = {}) const;
    std::vector<Neighbor> usages_of(const Coordinates& c, std::optional<Scope> scope = {}) const;

    // Throw Error(UnknownArtifact).
    std::optional<Coordinates> successor(const Coordinates& c) const;
    std::optional<Coordinates> predecessor(const Coordinates& c) const;

    // 0 for coordinates without edges.
    std::size_t out_degree(const Coordinates& c) const;
    std::size_t in_degree(const Coordinates& c) const;

    InsertReport report() const;

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t resolved_count() const noexcept { return resolved_count_; }
    std::size_t placeholder_count() const noexcept { return nodes_.size() - resolved_count_; }
    std::size_t dependency_edge_count() const noexcept { return edge_count_; }
    std::size_t next_edge_count() const noexcept { return next_.size(); }

    const std::map<Coordinates, GraphNode>& nodes() const noexcept { return nodes_; }
    // Every DEPENDS_ON edge, keyed by source.
    const std::map<Coordinates, std::set<Neighbor>>& out_edges() const noexcept { return out_; }
    const std::map<Coordinates, Coordinates>& next_edges() const noexcept { return next_; }
    // Resolved versions only.
    const std::map<LibraryId, std::set<Coordinates>>& library_index() const noexcept { return libraries_; }
    // Resolved artifacts under their year, month and day keys.
    const std::set<Coordinates>& released_in(const CalendarKey& key) const;

    // Structural equality: nodes, DEPENDS_ON edges and NEXT edges. Insert
    // counters are not part of the value.
    friend bool operator==(const DependencyGraph& a, const DependencyGraph& b);

private:
    GraphNode& index_resolved(GraphNode& node);

    std::map<Coordinates, GraphNode> nodes_;
    std::map<Coordinates, std::set<Neighbor>> out_;
    std::map<Coordinates, std::set<Neighbor>> in_;
    std::map<Coordinates, Coordinates> next_;
    std::map<Coordinates, Coordinates> prev_;
    std::map<LibraryId, std::set<Coordinates>> libraries_;
    std::map<CalendarKey, std::set<Coordinates>> calendar_;

    std::size_t resolved_count_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t inserted_ = 0;
    std::size_t duplicates_ = 0;
    bool chains_current_ = false;
};

// Per-library NEXT order: version order, then raw version string, then
// release timestamp, then coordinate string.
bool next_chain_less(const ArtifactRecord& a, const ArtifactRecord& b);

}  // namespace mavengraph
