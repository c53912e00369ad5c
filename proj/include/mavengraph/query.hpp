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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mavengraph/graph.hpp"

namespace mavengraph {

struct LibraryVersionCount {
    LibraryId library;
    std::size_t versions = 0;

    bool operator==(const LibraryVersionCount&) const = default;
};

struct GraphStats {
    std::size_t artifacts = 0;   // resolved nodes
    std::size_t libraries = 0;
    std::size_t groups = 0;
    std::size_t upgrades = 0;    // NEXT edges
    std::size_t dep_edges = 0;   // including edges to placeholders
    std::size_t unresolved = 0;  // placeholder nodes

    // dep_edges / artifacts, or 0 for a graph without artifacts. The exact
    // value is the fraction dep_edges : artifacts.
    double density() const noexcept {
        return artifacts == 0 ? 0.0 : static_cast<double>(dep_edges) / static_cast<double>(artifacts);
    }

    bool operator==(const GraphStats&) const = default;
};

enum class Metric { Dependencies, Usages, Versions };

std::string_view metric_name(Metric m) noexcept;

struct PercentileRow {
    Metric metric = Metric::Dependencies;
    std::int64_t p25 = 0;
    std::int64_t p50 = 0;
    std::int64_t p75 = 0;
    std::int64_t min = 0;
    std::int64_t max = 0;

    bool operator==(const PercentileRow&) const = default;
};

// Sorted by coordinates.
std::vector<Coordinates> artifacts_released_in(const DependencyGraph& g, const CalendarKey& key);

// Artifacts released in `year` with at least one DEPENDS_ON edge to any
// version of lib, placeholders included. Sorted, without duplicates.
std::vector<Coordinates> dependents_of_library_in_year(const DependencyGraph& g, const LibraryId& lib, int year,
                                                       std::optional<Scope> scope = {});

// One row per library, by LibraryId. Counts the versions on each NEXT path
// (edges + 1); a library split over several paths reports their sum.
// Throws Error(ChainsNotBuilt).
std::vector<LibraryVersionCount> versions_per_library(const DependencyGraph& g);

// Pairs (n, m) where n depends on m in any scope, n depends on a version j1
// of lib with `scope`, m depends on a version j2 of lib with `scope`, and j1
// is strictly older than j2. Sorted, without duplicates.
std::vector<std::pair<Coordinates, Coordinates>> stale_dependents(const DependencyGraph& g, const LibraryId& lib,
                                                                 Scope scope);

// Resolved versions of lib inside the range, in NEXT order. Throws
// Error(MalformedRange).
std::vector<Coordinates> artifacts_in_version_range(const DependencyGraph& g, const LibraryId& lib,
                                                    std::string_view range);

// Throws Error(ChainsNotBuilt).
GraphStats compute_stats(const DependencyGraph& g);

// Nearest rank: the ceil(p*N/100)-th smallest value; all zeros for N == 0.
PercentileRow percentile_row(Metric metric, std::vector<std::int64_t> values);

// Out-degree and in-degree over resolved artifacts, and versions per
// library. Throws Error(ChainsNotBuilt).
std::array<PercentileRow, 3> compute_percentiles(const DependencyGraph& g);

}  // namespace mavengraph
