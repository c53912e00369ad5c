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
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mavengraph/error.hpp"
#include "mavengraph/version.hpp"
#include "support/generators.hpp"
#include "support/flat_version_oracle.hpp"
#include "support/maven_version_oracle.hpp"
#include "support/version_vectors.hpp"

using namespace mavengraph;

namespace {

int cmp(std::string_view a, std::string_view b) {
    auto r = compare(parse_version(a), parse_version(b));
    return r < 0 ? -1 : (r > 0 ? 1 : 0);
}

using Token = VersionTokens::Token;
using Kind = Token::Kind;
constexpr auto kDot = VersionTokens::Separator::Dot;
constexpr auto kHyphen = VersionTokens::Separator::Hyphen;

}  // namespace

TEST_CASE("published comparison vectors") {
    const auto& vectors = testing::published_vectors();
    REQUIRE(vectors.size() >= 60);
    for (const auto& v : vectors) {
        CAPTURE(v.lhs);
        CAPTURE(v.rhs);
        CHECK(cmp(v.lhs, v.rhs) == v.expected);
        CHECK(cmp(v.rhs, v.lhs) == -v.expected);
        CHECK(testing::oracle::compare(v.lhs, v.rhs) == v.expected);
        CHECK(testing::flat_oracle::compare(v.lhs, v.rhs) == v.expected);
    }
}

TEST_CASE("parse_version tokenization") {
    CHECK(parse_version("1.0.0").tokens() == parse_version("1").tokens());
    CHECK(parse_version("1.0-alpha").tokens() ==
          std::vector<Token>{{kDot, Kind::Numeric, "1"}, {kHyphen, Kind::Qualifier, "alpha"}});
    CHECK(parse_version("x").tokens() == std::vector<Token>{{kDot, Kind::Qualifier, "x"}});
    CHECK(parse_version("1a1").tokens() == std::vector<Token>{{kDot, Kind::Numeric, "1"},
                                                             {kHyphen, Kind::Qualifier, "alpha"},
                                                             {kHyphen, Kind::Numeric, "1"}});
    CHECK(parse_version("1-0.1").tokens() == std::vector<Token>{{kDot, Kind::Numeric, "1"},
                                                               {kHyphen, Kind::Qualifier, ""},
                                                               {kDot, Kind::Numeric, "1"}});
    CHECK(parse_version("0").tokens().empty());
    CHECK(parse_version("1.0.0").raw() == "1.0.0");
    for (const char* blank : {"", " ", "\t\n"}) {
        try {
            parse_version(blank);
            FAIL("expected EmptyVersion");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyVersion);
        }
    }
}

TEST_CASE("compare examples") {
    CHECK(cmp("1.0", "1.1") < 0);
    CHECK(cmp("1.0-alpha", "1.0") < 0);
    CHECK(cmp("1.0", "1.0.0") == 0);
    CHECK(cmp("1.0-rc", "1.0-alpha") > 0);
    CHECK(cmp("1.0-alpha", "1.0-beta") < 0);
    CHECK(cmp("1.0-beta", "1.0-milestone") < 0);
    CHECK(cmp("1.0-milestone", "1.0-rc") < 0);
    CHECK(cmp("1.0-rc", "1.0-snapshot") < 0);
    CHECK(cmp("1.0-snapshot", "1.0") < 0);
    CHECK(cmp("1.0", "1.0-sp") < 0);
    CHECK(cmp("1.0-sp", "1.0-zzz") < 0);
    // an empty hyphen group vanishes
    CHECK(cmp("1--a", "1-a") == 0);
    CHECK(cmp("1-ga-1", "1-1") == 0);
    CHECK(cmp("1-1", "1.1") < 0);
    CHECK(cmp("1.x", "1-1") < 0);
}

TEST_CASE("is_lower is strict") {
    CHECK(is_lower(parse_version("4.11"), "4.12"));
    CHECK_FALSE(is_lower(parse_version("4.12"), "4.12"));
    CHECK(is_lower(parse_version("4.13-beta-1"), "4.13"));
    CHECK_FALSE(is_lower(parse_version("4.13"), "4.12"));
    CHECK_THROWS_AS(is_lower(parse_version("1"), ""), Error);
}

TEST_CASE("ranges") {
    CHECK(matches_range(parse_version("1.5"), "[1.0,2.0)"));
    CHECK_FALSE(matches_range(parse_version("2.0"), "[1.0,2.0)"));
    CHECK_FALSE(matches_range(parse_version("1.0-alpha"), "[1.0,2.0)"));
    CHECK(matches_range(parse_version("1.0"), "[1.0,2.0)"));
    CHECK(matches_range(parse_version("1.5"), "[1.5]"));
    CHECK(matches_range(parse_version("1.5.0"), "[1.5]"));
    CHECK_FALSE(matches_range(parse_version("1.6"), "[1.5]"));
    CHECK(matches_range(parse_version("0.1"), "(,1.0]"));
    CHECK(matches_range(parse_version("1.0"), "(,1.0]"));
    CHECK_FALSE(matches_range(parse_version("1.0"), "(,1.0)"));
    CHECK(matches_range(parse_version("9"), "[1.0,)"));
    CHECK(matches_range(parse_version("1.3"), "(,1.0],[1.2,)"));
    CHECK_FALSE(matches_range(parse_version("1.1"), "(,1.0],[1.2,)"));
    CHECK(matches_range(parse_version("1.1"), " ( 1.0 , 1.2 ) "));

    for (const char* bad : {"", "1.0", "[1.0", "[1.0,2.0", "(1.0)", "[1.0)", "[]", "[2.0,1.0]",
                            "[1.0,2.0),", "[1.0,2.0)x", "[1,2,3]", "[[1]]", "[1.0,2.0)(3,4)"}) {
        CAPTURE(bad);
        try {
            VersionRange::parse(bad);
            FAIL("expected MalformedRange");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MalformedRange);
        }
    }
}

TEST_CASE("compare is a total preorder matching the sort-key model on random strings") {
    std::mt19937_64 rng(42);
    std::vector<std::string> samples;
    for (int i = 0; i < 400; ++i) samples.push_back(testing::random_version(rng));
    std::vector<VersionTokens> parsed;
    for (const auto& s : samples) parsed.push_back(parse_version(s));

    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(compare(parsed[i], parsed[i]) == 0);
        for (std::size_t j = 0; j < samples.size(); j += 7) {
            int ab = cmp(samples[i], samples[j]);
            REQUIRE(ab == -cmp(samples[j], samples[i]));
            REQUIRE(ab == testing::flat_oracle::compare(samples[i], samples[j]));
            REQUIRE((ab == 0) == (parsed[i] == parsed[j]));
        }
    }
    // transitivity over sampled triples
    for (std::size_t i = 0; i < 60; ++i) {
        for (std::size_t j = 0; j < 60; ++j) {
            for (std::size_t k = 0; k < 60; ++k) {
                if (compare(parsed[i], parsed[j]) <= 0 && compare(parsed[j], parsed[k]) <= 0) {
                    REQUIRE(compare(parsed[i], parsed[k]) <= 0);
                }
            }
        }
    }
}

TEST_CASE("sorting is deterministic under permutation") {
    std::mt19937_64 rng(7);
    std::vector<std::string> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(testing::random_version(rng));
    auto sorted_by = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) {
            auto c = compare(parse_version(a), parse_version(b));
            return c != 0 ? c < 0 : a < b;
        });
        return v;
    };
    auto reference = sorted_by(samples);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(samples.begin(), samples.end(), rng);
        CHECK(sorted_by(samples) == reference);
    }
}

TEST_CASE("canonical rendering re-parses to the same tokens") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const auto s = testing::random_version(rng);
        const auto v = parse_version(s);
        CAPTURE(s);
        CAPTURE(v.canonical());
        REQUIRE(parse_version(v.canonical()).tokens() == v.tokens());
    }
}
