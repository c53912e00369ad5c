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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mavengraph/graph.hpp"

namespace mavengraph {

// Named queries with string parameters, rendered as CSV with a header row.
// Shared by the C API and the command line.

using QueryParams = std::map<std::string, std::string, std::less<>>;

struct QuerySpec {
    std::string_view name;
    std::vector<std::string_view> required;
    std::vector<std::string_view> optional;
};

const std::vector<QuerySpec>& query_specs();

// Throws Error(InvalidArgument) for an unknown query, an unknown or missing
// parameter, or a badly formed year/date; other errors come from the query.
std::string run_query(const DependencyGraph& g, std::string_view name, const QueryParams& params);

// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace mavengraph
