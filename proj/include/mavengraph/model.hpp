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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mavengraph/version.hpp"

namespace mavengraph {

// Milliseconds since the Unix epoch, UTC.
using EpochMillis = std::int64_t;

// groupId:artifactId. Every version of a library shares one LibraryId.
struct LibraryId {
    std::string group_id;
    std::string artifact_id;

    // "g:a"; throws Error(MalformedCoordinates).
    static LibraryId parse(std::string_view text);

    std::string str() const { return group_id + ":" + artifact_id; }

    auto operator<=>(const LibraryId&) const = default;
};

// Artifact identity, group:artifact:version. Components are trimmed, non-empty
// and free of ':'. Ordering is lexicographic by (group, artifact, version).
class Coordinates {
public:
    // Throws Error(MalformedCoordinates).
    Coordinates(std::string_view group_id, std::string_view artifact_id, std::string_view version);

    // Exactly two ':' separators after trimming; throws Error(MalformedCoordinates).
    static Coordinates parse(std::string_view text);

    const std::string& group_id() const noexcept { return group_id_; }
    const std::string& artifact_id() const noexcept { return artifact_id_; }
    const std::string& version() const noexcept { return version_; }

    LibraryId library() const { return {group_id_, artifact_id_}; }
    std::string str() const;

    auto operator<=>(const Coordinates&) const = default;

private:
    std::string group_id_;
    std::string artifact_id_;
    std::string version_;
};

enum class Scope { Compile, Runtime, Provided, Test, System, Import };

inline constexpr Scope kAllScopes[] = {Scope::Compile, Scope::Runtime, Scope::Provided,
                                       Scope::Test,    Scope::System,  Scope::Import};

// Case-insensitive; throws Error(UnknownScope).
Scope scope_from_string(std::string_view text);
// "compile", "test", ... as written to CSV.
std::string_view scope_csv_name(Scope scope) noexcept;
// "Compile", "Test", ...
std::string_view scope_display_name(Scope scope) noexcept;

class Packaging {
public:
    enum class Kind { Jar, War, Pom, Ear, Other };

    Packaging() = default;
    static Packaging jar() { return Packaging(Kind::Jar, {}); }
    // The four named packagings match case-insensitively; anything else is
    // carried verbatim as Other. Empty text means Jar.
    static Packaging parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    // Lowercase for named kinds, raw string for Other.
    std::string csv_name() const;
    // "Jar", "War", "Pom", "Ear", or the raw string.
    std::string display_name() const;

    bool operator==(const Packaging&) const = default;

private:
    Packaging(Kind kind, std::string other) : kind_(kind), other_(std::move(other)) {}

    Kind kind_ = Kind::Jar;
    std::string other_;
};

// A calendar bucket at year, year-month or year-month-day granularity.
class CalendarKey {
public:
    enum class Granularity { Year, Month, Day };

    // Throws Error(InvalidArgument) on out-of-range fields.
    explicit CalendarKey(int year, std::optional<unsigned> month = {}, std::optional<unsigned> day = {});

    // "YYYY", "YYYY-MM" or "YYYY-MM-DD"; throws Error(InvalidArgument).
    static CalendarKey parse(std::string_view text);

    int year() const noexcept { return year_; }
    std::optional<unsigned> month() const noexcept { return month_; }
    std::optional<unsigned> day() const noexcept { return day_; }
    Granularity granularity() const noexcept;

    // Drops the finer fields; the requested granularity must not exceed this key's.
    CalendarKey truncated(Granularity g) const;
    std::string str() const;

    auto operator<=>(const CalendarKey&) const = default;

private:
    int year_;
    std::optional<unsigned> month_;
    std::optional<unsigned> day_;
};

// Fully populated (year, month, day) in the proleptic Gregorian calendar, UTC.
// Throws Error(InvalidArgument) for negative timestamps.
CalendarKey calendar_key_of(EpochMillis timestamp);

class ArtifactRecord {
public:
    // Throws Error(InvalidArgument) when release_timestamp < 0.
    ArtifactRecord(Coordinates coordinates, Packaging packaging, EpochMillis release_timestamp);

    const Coordinates& coordinates() const noexcept { return coordinates_; }
    const Packaging& packaging() const noexcept { return packaging_; }
    EpochMillis release_timestamp() const noexcept { return release_timestamp_; }
    const VersionTokens& parsed_version() const noexcept { return parsed_version_; }
    CalendarKey calendar_key() const { return calendar_key_of(release_timestamp_); }

    bool operator==(const ArtifactRecord& other) const {
        return coordinates_ == other.coordinates_ && packaging_ == other.packaging_ &&
               release_timestamp_ == other.release_timestamp_;
    }

private:
    Coordinates coordinates_;
    Packaging packaging_;
    EpochMillis release_timestamp_;
    VersionTokens parsed_version_;
};

struct DependencyEdge {
    Coordinates source;  // user
    Coordinates target;  // provider
    Scope scope;

    // Throws Error(SelfDependency) when source == target.
    DependencyEdge(Coordinates source, Coordinates target, Scope scope);

    auto operator<=>(const DependencyEdge&) const = default;
};

}  // namespace mavengraph
