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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mavengraph/model.hpp"

namespace mavengraph {

struct PomDocument {
    std::string text;
    std::string source;  // path or URL, used in error messages only
};

struct DependencyDecl {
    std::string group_id;
    std::string artifact_id;
    // Absent when the POM omits it or it does not interpolate; such
    // declarations cannot name a target artifact.
    std::optional<std::string> version;
    Scope scope = Scope::Compile;
    bool optional = false;

    bool operator==(const DependencyDecl&) const = default;
};

struct ParsedPom {
    Coordinates coordinates;
    Packaging packaging;
    std::vector<DependencyDecl> dependencies;  // document order
};

struct Interpolation {
    std::string text;
    bool unresolved = false;  // at least one ${...} was left verbatim
};

using PropertyMap = std::map<std::string, std::string, std::less<>>;

// Replaces ${key} wherever key is in the map. Substituted values are
// expanded recursively; self-referencing chains are left verbatim.
Interpolation interpolate(std::string_view text, const PropertyMap& properties);

// Returns the parent document for the given coordinates, if the corpus has it.
using ParentLookup = std::function<std::optional<PomDocument>(const Coordinates&)>;

// Throws Error(CorruptPom) for malformed XML, a root other than <project>, or
// a groupId/artifactId/version that is missing or does not interpolate.
ParsedPom parse_pom(const PomDocument& doc, const ParentLookup& parent_lookup = {});

// A minimal document that parse_pom maps back to the same record.
std::string write_pom(const ParsedPom& pom);

}  // namespace mavengraph
