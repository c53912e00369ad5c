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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mavengraph {

// Maven version ordering.
//
// A version is split into tokens at '.', at '-' and at every digit/letter
// transition (which counts as '-'). Each token keeps the separator that
// precedes it; an empty token becomes 0. Within every hyphen-delimited group
// trailing null tokens (0, "", "ga", "final", "release") are trimmed, and a
// group left empty disappears, so "1", "1.0", "1-0" and "1.0-ga" are equal.
//
// Qualifiers are lowercased; "cr" becomes "rc", and a/b/m become
// alpha/beta/milestone when a digit follows them directly. Tokens are ordered
//   alpha < beta < milestone < rc < snapshot < "" < sp < other qualifiers
//         < -number < .number
// with other qualifiers lexicographic and numbers by value. The separator is
// irrelevant for qualifiers. The shorter version is padded with "", which
// makes the order a total preorder.
class VersionTokens {
public:
    enum class Separator { Dot, Hyphen };

    struct Token {
        enum class Kind { Numeric, Qualifier };

        Separator separator = Separator::Dot;
        Kind kind = Kind::Numeric;
        // Numeric: decimal digits without leading zeros. Qualifier: the
        // normalized lowercase string.
        std::string value;

        // Qualifiers compare equal regardless of separator.
        friend bool operator==(const Token& a, const Token& b) noexcept {
            return a.kind == b.kind && a.value == b.value &&
                   (a.kind == Kind::Qualifier || a.separator == b.separator);
        }
    };

    // Throws Error(EmptyVersion) on empty or blank input; any other string parses.
    static VersionTokens parse(std::string_view text);

    const std::string& raw() const noexcept { return raw_; }
    const std::vector<Token>& tokens() const noexcept { return tokens_; }

    // A string that parses back to the same token list.
    std::string canonical() const;

    // Equality of normalized tokens; raw strings may differ.
    friend bool operator==(const VersionTokens& a, const VersionTokens& b) noexcept {
        return a.tokens_ == b.tokens_;
    }

private:
    std::string raw_;
    std::vector<Token> tokens_;
};

inline VersionTokens parse_version(std::string_view text) { return VersionTokens::parse(text); }

// Weak because distinct raw strings ("1.0", "1.0.0") may compare equivalent.
std::weak_ordering compare(const VersionTokens& a, const VersionTokens& b) noexcept;

inline std::weak_ordering operator<=>(const VersionTokens& a, const VersionTokens& b) noexcept {
    return compare(a, b);
}

// True iff node_version is strictly older than reference.
bool is_lower(const VersionTokens& node_version, std::string_view reference);

// A union of intervals in Maven bracket syntax: "[1.0,2.0)", "[1.5]",
// "(,1.0]", "(,1.0],[1.2,)". An omitted bound is unbounded.
class VersionRange {
public:
    struct Interval {
        std::optional<VersionTokens> lower;
        bool lower_inclusive = false;
        std::optional<VersionTokens> upper;
        bool upper_inclusive = false;

        bool contains(const VersionTokens& v) const noexcept;
    };

    // Throws Error(MalformedRange).
    static VersionRange parse(std::string_view text);

    bool contains(const VersionTokens& v) const noexcept;
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

private:
    std::vector<Interval> intervals_;
};

bool matches_range(const VersionTokens& v, std::string_view range);

}  // namespace mavengraph
