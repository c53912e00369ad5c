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
#include "mavengraph/graph.hpp"

#include <algorithm>

#include "mavengraph/error.hpp"

namespace mavengraph {

namespace {

[[noreturn]] void unknown(const Coordinates& c) {
    throw Error(ErrorCode::UnknownArtifact, "unknown artifact " + c.str());
}

[[noreturn]] void violation(const std::string& why) { throw Error(ErrorCode::ChainViolation, why); }

std::vector<Neighbor> filtered(const std::map<Coordinates, std::set<Neighbor>>& adjacency, const Coordinates& c,
                               std::optional<Scope> scope) {
    std::vector<Neighbor> out;
    auto it = adjacency.find(c);
    if (it == adjacency.end()) return out;
    for (const auto& n : it->second) {
        if (!scope || n.second == *scope) out.push_back(n);
    }
    return out;
}

const std::set<Coordinates> kNoCoordinates;

}  // namespace

bool next_chain_less(const ArtifactRecord& a, const ArtifactRecord& b) {
    if (auto c = compare(a.parsed_version(), b.parsed_version()); c != 0) return c < 0;
    const auto& va = a.coordinates().version();
    const auto& vb = b.coordinates().version();
    if (va != vb) return va < vb;
    if (a.release_timestamp() != b.release_timestamp()) return a.release_timestamp() < b.release_timestamp();
    return a.coordinates().str() < b.coordinates().str();
}

GraphNode& DependencyGraph::index_resolved(GraphNode& node) {
    const ArtifactRecord& rec = *node.record;
    libraries_[rec.coordinates().library()].insert(rec.coordinates());
    const CalendarKey day = rec.calendar_key();
    for (auto g : {CalendarKey::Granularity::Year, CalendarKey::Granularity::Month, CalendarKey::Granularity::Day}) {
        calendar_[day.truncated(g)].insert(rec.coordinates());
    }
    ++resolved_count_;
    ++inserted_;
    chains_current_ = false;
    return node;
}

bool DependencyGraph::insert_artifact(const ArtifactRecord& record) {
    auto [it, fresh] = nodes_.try_emplace(record.coordinates(), GraphNode{record.coordinates(), record});
    if (!fresh) {
        if (it->second.resolved()) {
            ++duplicates_;
            return false;
        }
        it->second.record = record;
    }
    index_resolved(it->second);
    return true;
}

void DependencyGraph::insert_dependency(const Coordinates& source, const Coordinates& target, Scope scope) {
    if (source == target) {
        throw Error(ErrorCode::SelfDependency, "self dependency on " + source.str());
    }
    if (!is_resolved(source)) unknown(source);
    nodes_.try_emplace(target, GraphNode{target, std::nullopt});
    if (out_[source].emplace(target, scope).second) {
        in_[target].emplace(source, scope);
        ++edge_count_;
    }
}

std::size_t DependencyGraph::build_next_chains() {
    next_.clear();
    prev_.clear();
    std::vector<const ArtifactRecord*> versions;
    for (const auto& [lib, members] : libraries_) {
        versions.clear();
        for (const auto& c : members) versions.push_back(&*nodes_.at(c).record);
        std::sort(versions.begin(), versions.end(),
                  [](const ArtifactRecord* a, const ArtifactRecord* b) { return next_chain_less(*a, *b); });
        for (std::size_t i = 1; i < versions.size(); ++i) {
            next_.emplace(versions[i - 1]->coordinates(), versions[i]->coordinates());
            prev_.emplace(versions[i]->coordinates(), versions[i - 1]->coordinates());
        }
    }
    chains_current_ = true;
    return next_.size();
}

void DependencyGraph::load_next_chains(const std::vector<std::pair<Coordinates, Coordinates>>& edges) {
    std::map<Coordinates, Coordinates> next;
    std::map<Coordinates, Coordinates> prev;
    for (const auto& [from, to] : edges) {
        const std::string edge = from.str() + " -> " + to.str();
        if (from == to) violation("NEXT self loop " + edge);
        if (!is_resolved(from) || !is_resolved(to)) violation("NEXT endpoint is not a resolved artifact: " + edge);
        if (from.library() != to.library()) violation("NEXT crosses libraries: " + edge);
        if (!next.emplace(from, to).second) violation("NEXT branches at " + from.str());
        if (!prev.emplace(to, from).second) violation("NEXT merges at " + to.str());
    }
    // With in- and out-degree at most one, anything unreachable from a head
    // lies on a cycle.
    std::size_t reached = 0;
    for (const auto& [from, to] : next) {
        if (prev.count(from) != 0) continue;
        for (auto it = next.find(from); it != next.end(); it = next.find(it->second)) ++reached;
    }
    if (reached != next.size()) violation("NEXT edges form a cycle");
    next_ = std::move(next);
    prev_ = std::move(prev);
    chains_current_ = true;
}

bool DependencyGraph::is_resolved(const Coordinates& c) const {
    auto it = nodes_.find(c);
    return it != nodes_.end() && it->second.resolved();
}

const ArtifactRecord* DependencyGraph::find(const Coordinates& c) const {
    auto it = nodes_.find(c);
    return it == nodes_.end() || !it->second.resolved() ? nullptr : &*it->second.record;
}

std::vector<Neighbor> DependencyGraph::dependencies_of(const Coordinates& c, std::optional<Scope> scope) const {
    if (!contains(c)) unknown(c);
    return filtered(out_, c, scope);
}

std::vector<Neighbor> DependencyGraph::usages_of(const Coordinates& c, std::optional<Scope> scope) const {
    if (!contains(c)) unknown(c);
    return filtered(in_, c, scope);
}

std::optional<Coordinates> DependencyGraph::successor(const Coordinates& c) const {
    if (!contains(c)) unknown(c);
    auto it = next_.find(c);
    return it == next_.end() ? std::nullopt : std::optional<Coordinates>(it->second);
}

std::optional<Coordinates> DependencyGraph::predecessor(const Coordinates& c) const {
    if (!contains(c)) unknown(c);
    auto it = prev_.find(c);
    return it == prev_.end() ? std::nullopt : std::optional<Coordinates>(it->second);
}

std::size_t DependencyGraph::out_degree(const Coordinates& c) const {
    auto it = out_.find(c);
    return it == out_.end() ? 0 : it->second.size();
}

std::size_t DependencyGraph::in_degree(const Coordinates& c) const {
    auto it = in_.find(c);
    return it == in_.end() ? 0 : it->second.size();
}

InsertReport DependencyGraph::report() const {
    InsertReport r{inserted_, duplicates_, 0};
    for (const auto& [c, node] : nodes_) {
        if (node.resolved()) continue;
        r.dangling_edges += in_degree(c);
    }
    return r;
}

const std::set<Coordinates>& DependencyGraph::released_in(const CalendarKey& key) const {
    auto it = calendar_.find(key);
    return it == calendar_.end() ? kNoCoordinates : it->second;
}

bool operator==(const DependencyGraph& a, const DependencyGraph& b) {
    return a.nodes_ == b.nodes_ && a.out_ == b.out_ && a.next_ == b.next_;
}

}  // namespace mavengraph
