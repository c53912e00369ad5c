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
#include "mavengraph/version.hpp"

#include <algorithm>
#include <array>

#include "mavengraph/error.hpp"
#include "text_util.hpp"

namespace mavengraph {

namespace {

using Token = VersionTokens::Token;
using Kind = Token::Kind;
using Separator = VersionTokens::Separator;

constexpr std::array<std::string_view, 7> kQualifierRanks = {
    "alpha", "beta", "milestone", "rc", "snapshot", "", "sp"};

// Sort key that places known qualifiers by rank and every unknown qualifier
// after them, in lexicographic order.
std::string comparable_qualifier(const std::string& q) {
    for (std::size_t i = 0; i < kQualifierRanks.size(); ++i) {
        if (q == kQualifierRanks[i]) return std::to_string(i);
    }
    return std::to_string(kQualifierRanks.size()) + "-" + q;
}

std::string normalize_qualifier(std::string_view raw, bool followed_by_digit) {
    std::string q(raw);
    if (followed_by_digit && q.size() == 1) {
        switch (q[0]) {
            case 'a': return "alpha";
            case 'b': return "beta";
            case 'm': return "milestone";
            default: break;
        }
    }
    if (q == "ga" || q == "final" || q == "release") return "";
    if (q == "cr") return "rc";
    return q;
}

std::string normalize_number(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return "0";
    return std::string(digits.substr(first));
}

bool is_null(const Token& t) {
    return t.kind == Kind::Numeric ? t.value == "0" : t.value.empty();
}

std::vector<Token> tokenize(std::string_view version) {
    std::vector<Token> out;
    Separator sep = Separator::Dot;
    std::string buf;
    bool buf_digits = false;
    auto flush = [&](bool followed_by_digit) {
        if (buf.empty()) {
            out.push_back(Token{sep, Kind::Numeric, "0"});
        } else if (buf_digits) {
            out.push_back(Token{sep, Kind::Numeric, normalize_number(buf)});
        } else {
            out.push_back(Token{sep, Kind::Qualifier, normalize_qualifier(buf, followed_by_digit)});
        }
        buf.clear();
    };
    for (char c : version) {
        if (c == '.' || c == '-') {
            flush(false);
            sep = c == '-' ? Separator::Hyphen : Separator::Dot;
            continue;
        }
        const bool digit = is_ascii_digit(c);
        if (!buf.empty() && digit != buf_digits) {
            flush(digit);
            sep = Separator::Hyphen;
        }
        buf.push_back(c);
        buf_digits = digit;
    }
    flush(false);
    return out;
}

// Per hyphen group: drop trailing nulls; an emptied group vanishes. A
// surviving "-0" heads a group followed by more tokens and is equivalent to
// the padding, so it is stored as the empty qualifier.
std::vector<Token> normalize(std::vector<Token> raw) {
    std::vector<Token> out;
    std::size_t begin = 0;
    while (begin < raw.size()) {
        std::size_t end = begin + 1;
        while (end < raw.size() && raw[end].separator != Separator::Hyphen) ++end;
        std::size_t last = end;
        while (last > begin && is_null(raw[last - 1])) --last;
        for (std::size_t i = begin; i < last; ++i) out.push_back(std::move(raw[i]));
        begin = end;
    }
    for (Token& t : out) {
        if (t.kind == Kind::Numeric && t.separator == Separator::Hyphen && t.value == "0") {
            t.kind = Kind::Qualifier;
            t.value.clear();
        }
    }
    return out;
}

int sign(int v) { return (v > 0) - (v < 0); }

// Qualifiers (any separator) < hyphen numbers < dot numbers.
int token_class(const Token& t) {
    if (t.kind == Kind::Qualifier) return 0;
    return t.separator == Separator::Hyphen ? 1 : 2;
}

int compare_tokens(const Token& a, const Token& b) {
    const int ca = token_class(a);
    const int cb = token_class(b);
    if (ca != cb) return ca < cb ? -1 : 1;
    if (ca == 0) return sign(comparable_qualifier(a.value).compare(comparable_qualifier(b.value)));
    if (a.value.size() != b.value.size()) return a.value.size() < b.value.size() ? -1 : 1;
    return sign(a.value.compare(b.value));
}

const Token kPadding{Separator::Hyphen, Kind::Qualifier, ""};

}  // namespace

VersionTokens VersionTokens::parse(std::string_view text) {
    if (trim(text).empty()) {
        throw Error(ErrorCode::EmptyVersion, "empty version string");
    }
    VersionTokens out;
    out.raw_ = std::string(text);
    out.tokens_ = normalize(tokenize(ascii_lower(text)));
    return out;
}

std::string VersionTokens::canonical() const {
    if (tokens_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const Token& t = tokens_[i];
        if (t.separator == Separator::Hyphen) {
            out.push_back('-');
        } else if (i > 0) {
            out.push_back('.');
        }
        // "" would otherwise render as an empty token, which parses as 0.
        out += (t.kind == Kind::Qualifier && t.value.empty()) ? std::string("ga") : t.value;
    }
    return out;
}

std::weak_ordering compare(const VersionTokens& a, const VersionTokens& b) noexcept {
    const auto& ta = a.tokens();
    const auto& tb = b.tokens();
    const std::size_t n = std::max(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Token& l = i < ta.size() ? ta[i] : kPadding;
        const Token& r = i < tb.size() ? tb[i] : kPadding;
        if (int c = compare_tokens(l, r); c != 0) {
            return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
        }
    }
    return std::weak_ordering::equivalent;
}

bool is_lower(const VersionTokens& node_version, std::string_view reference) {
    return compare(node_version, VersionTokens::parse(reference)) < 0;
}

bool VersionRange::Interval::contains(const VersionTokens& v) const noexcept {
    if (lower) {
        auto c = compare(v, *lower);
        if (c < 0 || (c == 0 && !lower_inclusive)) return false;
    }
    if (upper) {
        auto c = compare(v, *upper);
        if (c > 0 || (c == 0 && !upper_inclusive)) return false;
    }
    return true;
}

namespace {

[[noreturn]] void malformed(std::string_view spec, const std::string& why) {
    throw Error(ErrorCode::MalformedRange, "malformed version range '" + std::string(spec) + "': " + why);
}

VersionTokens bound(std::string_view spec, std::string_view text) {
    if (text.find_first_of("[]()") != std::string_view::npos) malformed(spec, "nested bracket");
    return VersionTokens::parse(text);
}

}  // namespace

VersionRange VersionRange::parse(std::string_view text) {
    VersionRange range;
    std::string_view rest = trim(text);
    if (rest.empty()) malformed(text, "empty");
    while (!rest.empty()) {
        const char open = rest.front();
        if (open != '[' && open != '(') malformed(text, "expected '[' or '('");
        const auto close_at = rest.find_first_of("])");
        if (close_at == std::string_view::npos) malformed(text, "unterminated interval");
        const char close = rest[close_at];
        const std::string_view body = trim(rest.substr(1, close_at - 1));

        Interval iv;
        iv.lower_inclusive = open == '[';
        iv.upper_inclusive = close == ']';
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            if (body.empty()) malformed(text, "empty interval");
            if (!iv.lower_inclusive || !iv.upper_inclusive) malformed(text, "single version must use []");
            iv.lower = bound(text, body);
            iv.upper = iv.lower;
        } else {
            const std::string_view lo = trim(body.substr(0, comma));
            const std::string_view hi = trim(body.substr(comma + 1));
            if (hi.find(',') != std::string_view::npos) malformed(text, "too many bounds");
            if (!lo.empty()) iv.lower = bound(text, lo);
            if (!hi.empty()) iv.upper = bound(text, hi);
            if (iv.lower && iv.upper && compare(*iv.lower, *iv.upper) > 0) {
                malformed(text, "lower bound exceeds upper bound");
            }
        }
        range.intervals_.push_back(std::move(iv));

        rest = trim(rest.substr(close_at + 1));
        if (!rest.empty()) {
            if (rest.front() != ',') malformed(text, "expected ',' between intervals");
            rest = trim(rest.substr(1));
            if (rest.empty()) malformed(text, "trailing ','");
        }
    }
    return range;
}

bool VersionRange::contains(const VersionTokens& v) const noexcept {
    for (const auto& iv : intervals_) {
        if (iv.contains(v)) return true;
    }
    return false;
}

bool matches_range(const VersionTokens& v, std::string_view range) {
    return VersionRange::parse(range).contains(v);
}

}  // namespace mavengraph
