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
#include "mavengraph/model.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <system_error>

#include "mavengraph/error.hpp"
#include "text_util.hpp"

namespace mavengraph {

namespace {

std::string validated_component(std::string_view raw, std::string_view what) {
    std::string_view value = trim(raw);
    if (value.empty()) {
        throw Error(ErrorCode::MalformedCoordinates, "empty " + std::string(what));
    }
    if (value.find(':') != std::string_view::npos) {
        throw Error(ErrorCode::MalformedCoordinates,
                    std::string(what) + " contains ':': '" + std::string(value) + "'");
    }
    return std::string(value);
}

std::optional<unsigned> parse_unsigned(std::string_view text) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

LibraryId LibraryId::parse(std::string_view text) {
    std::string_view body = trim(text);
    auto sep = body.find(':');
    if (sep == std::string_view::npos || body.find(':', sep + 1) != std::string_view::npos) {
        throw Error(ErrorCode::MalformedCoordinates,
                    "expected group:artifact, got '" + std::string(text) + "'");
    }
    return {validated_component(body.substr(0, sep), "groupId"),
            validated_component(body.substr(sep + 1), "artifactId")};
}

Coordinates::Coordinates(std::string_view group_id, std::string_view artifact_id, std::string_view version)
    : group_id_(validated_component(group_id, "groupId")),
      artifact_id_(validated_component(artifact_id, "artifactId")),
      version_(validated_component(version, "version")) {}

Coordinates Coordinates::parse(std::string_view text) {
    std::string_view body = trim(text);
    auto first = body.find(':');
    auto second = first == std::string_view::npos ? first : body.find(':', first + 1);
    if (second == std::string_view::npos || body.find(':', second + 1) != std::string_view::npos) {
        throw Error(ErrorCode::MalformedCoordinates,
                    "expected group:artifact:version, got '" + std::string(text) + "'");
    }
    return Coordinates(body.substr(0, first), body.substr(first + 1, second - first - 1),
                       body.substr(second + 1));
}

std::string Coordinates::str() const {
    std::string out;
    out.reserve(group_id_.size() + artifact_id_.size() + version_.size() + 2);
    out.append(group_id_).append(":").append(artifact_id_).append(":").append(version_);
    return out;
}

Scope scope_from_string(std::string_view text) {
    const std::string folded = ascii_lower(text);
    for (Scope s : kAllScopes) {
        if (folded == scope_csv_name(s)) {
            return s;
        }
    }
    throw Error(ErrorCode::UnknownScope, "unknown scope '" + std::string(text) + "'");
}

std::string_view scope_csv_name(Scope scope) noexcept {
    switch (scope) {
        case Scope::Compile: return "compile";
        case Scope::Runtime: return "runtime";
        case Scope::Provided: return "provided";
        case Scope::Test: return "test";
        case Scope::System: return "system";
        case Scope::Import: return "import";
    }
    return "compile";
}

std::string_view scope_display_name(Scope scope) noexcept {
    switch (scope) {
        case Scope::Compile: return "Compile";
        case Scope::Runtime: return "Runtime";
        case Scope::Provided: return "Provided";
        case Scope::Test: return "Test";
        case Scope::System: return "System";
        case Scope::Import: return "Import";
    }
    return "Compile";
}

Packaging Packaging::parse(std::string_view text) {
    std::string_view value = trim(text);
    const std::string folded = ascii_lower(value);
    if (folded.empty() || folded == "jar") return Packaging(Kind::Jar, {});
    if (folded == "war") return Packaging(Kind::War, {});
    if (folded == "pom") return Packaging(Kind::Pom, {});
    if (folded == "ear") return Packaging(Kind::Ear, {});
    return Packaging(Kind::Other, std::string(value));
}

std::string Packaging::csv_name() const {
    switch (kind_) {
        case Kind::Jar: return "jar";
        case Kind::War: return "war";
        case Kind::Pom: return "pom";
        case Kind::Ear: return "ear";
        case Kind::Other: return other_;
    }
    return other_;
}

std::string Packaging::display_name() const {
    switch (kind_) {
        case Kind::Jar: return "Jar";
        case Kind::War: return "War";
        case Kind::Pom: return "Pom";
        case Kind::Ear: return "Ear";
        case Kind::Other: return other_;
    }
    return other_;
}

CalendarKey::CalendarKey(int year, std::optional<unsigned> month, std::optional<unsigned> day)
    : year_(year), month_(month), day_(day) {
    namespace chr = std::chrono;
    if (day_ && !month_) {
        throw Error(ErrorCode::InvalidArgument, "calendar key has a day but no month");
    }
    if (!chr::year(year_).ok()) {
        throw Error(ErrorCode::InvalidArgument, "year out of range: " + std::to_string(year_));
    }
    if (month_ && (*month_ < 1 || *month_ > 12)) {
        throw Error(ErrorCode::InvalidArgument, "month out of range: " + std::to_string(*month_));
    }
    if (day_ && !chr::year_month_day(chr::year(year_), chr::month(*month_), chr::day(*day_)).ok()) {
        throw Error(ErrorCode::InvalidArgument, "invalid date " + str());
    }
}

CalendarKey CalendarKey::parse(std::string_view text) {
    std::string_view body = trim(text);
    std::optional<unsigned> parts[3];
    std::size_t count = 0;
    while (count < 3) {
        auto dash = body.find('-');
        auto part = parse_unsigned(body.substr(0, dash));
        if (!part) break;
        parts[count++] = part;
        if (dash == std::string_view::npos) {
            body = {};
            break;
        }
        body.remove_prefix(dash + 1);
        if (body.empty()) {
            count = 0;
            break;
        }
    }
    if (count == 0 || !body.empty()) {
        throw Error(ErrorCode::InvalidArgument, "expected YYYY[-MM[-DD]], got '" + std::string(text) + "'");
    }
    return CalendarKey(static_cast<int>(*parts[0]), parts[1], parts[2]);
}

CalendarKey::Granularity CalendarKey::granularity() const noexcept {
    if (day_) return Granularity::Day;
    if (month_) return Granularity::Month;
    return Granularity::Year;
}

CalendarKey CalendarKey::truncated(Granularity g) const {
    if (g > granularity()) {
        throw Error(ErrorCode::InvalidArgument, "cannot refine calendar key " + str());
    }
    switch (g) {
        case Granularity::Year: return CalendarKey(year_);
        case Granularity::Month: return CalendarKey(year_, month_);
        case Granularity::Day: return *this;
    }
    return *this;
}

std::string CalendarKey::str() const {
    auto two = [](unsigned v) { return (v < 10 ? "0" : "") + std::to_string(v); };
    std::string out = std::to_string(year_);
    if (month_) out += "-" + two(*month_);
    if (day_) out += "-" + two(*day_);
    return out;
}

CalendarKey calendar_key_of(EpochMillis timestamp) {
    namespace chr = std::chrono;
    if (timestamp < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative timestamp " + std::to_string(timestamp));
    }
    const chr::sys_time<chr::milliseconds> instant{chr::milliseconds(timestamp)};
    const chr::year_month_day ymd{chr::floor<chr::days>(instant)};
    return CalendarKey(static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                       static_cast<unsigned>(ymd.day()));
}

ArtifactRecord::ArtifactRecord(Coordinates coordinates, Packaging packaging, EpochMillis release_timestamp)
    : coordinates_(std::move(coordinates)),
      packaging_(std::move(packaging)),
      release_timestamp_(release_timestamp),
      parsed_version_(VersionTokens::parse(coordinates_.version())) {
    if (release_timestamp_ < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "negative release timestamp for " + coordinates_.str());
    }
}

DependencyEdge::DependencyEdge(Coordinates source_, Coordinates target_, Scope scope_)
    : source(std::move(source_)), target(std::move(target_)), scope(scope_) {
    if (source == target) {
        throw Error(ErrorCode::SelfDependency, source.str() + " depends on itself");
    }
}

}  // namespace mavengraph
