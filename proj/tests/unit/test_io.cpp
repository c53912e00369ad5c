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

#include <fstream>
#include <random>
#include <sstream>

#include "mavengraph/error.hpp"
#include "mavengraph/io.hpp"
#include "mavengraph/query.hpp"
#include "support/corpus.hpp"
#include "support/temp_dir.hpp"

using namespace mavengraph;

namespace {

Coordinates co(const char* text) { return Coordinates::parse(text); }

std::vector<std::vector<std::string>> read_all(const std::string& text) {
    std::istringstream in(text);
    CsvReader reader(in);
    CsvReader::Record r;
    std::vector<std::vector<std::string>> out;
    while (reader.next(r)) out.push_back(r.fields);
    return out;
}

std::pair<std::string, std::string> export_text(const DependencyGraph& g) {
    std::ostringstream nodes, edges;
    export_csv(g, nodes, edges);
    return {nodes.str(), edges.str()};
}

DependencyGraph import_text(const std::string& nodes, const std::string& edges, const HeaderRenames& renames = {}) {
    std::istringstream n(nodes), e(edges);
    return import_csv(n, e, renames);
}

const std::string kNodeHeader = "coordinates,groupId,artifactId,version,packaging,release_timestamp\n";
const std::string kEdgeHeader = "source,target,kind,scope\n";

template <typename F>
Error error_of(F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an error");
    return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("csv reader") {
    using Rows = std::vector<std::vector<std::string>>;
    CHECK(read_all("") == Rows{});
    CHECK(read_all("a,b\n") == Rows{{"a", "b"}});
    CHECK(read_all("a,b") == Rows{{"a", "b"}});
    CHECK(read_all("a,,b\r\n\r\nc\n") == Rows{{"a", "", "b"}, {"c"}});
    CHECK(read_all("\"x,y\",\"he said \"\"hi\"\"\"\n") == Rows{{"x,y", "he said \"hi\""}});
    CHECK(read_all("\"multi\nline\",z\n") == Rows{{"multi\nline", "z"}});
    CHECK(read_all("\"\"\n") == Rows{{""}});
    CHECK(read_all("a\rb\n") == Rows{{"a\rb"}});

    std::istringstream in("h\n\"multi\nline\"\nbad\"quote\n");
    CsvReader reader(in);
    CsvReader::Record r;
    REQUIRE(reader.next(r));
    CHECK(r.line == 1);
    REQUIRE(reader.next(r));
    CHECK(r.line == 2);
    try {
        reader.next(r);
        FAIL("expected RowError");
    } catch (const RowError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(read_all("\"open\n"), RowError);
    CHECK_THROWS_AS(read_all("\"a\"b\n"), RowError);

    std::ostringstream out;
    write_csv_row(out, {"plain", "a,b", "q\"", "n\nl", ""});
    CHECK(out.str() == "plain,\"a,b\",\"q\"\"\",\"n\nl\",\n");
    CHECK(read_all(out.str()) == Rows{{"plain", "a,b", "q\"", "n\nl", ""}});
}

TEST_CASE("export of small graphs") {
    DependencyGraph empty;
    empty.build_next_chains();
    CHECK(export_text(empty) == std::make_pair(kNodeHeader, kEdgeHeader));

    DependencyGraph g;
    g.insert_artifact(ArtifactRecord(co("g:b:1"), Packaging::parse("war"), 5));
    g.insert_artifact(ArtifactRecord(co("g:a:1"), Packaging::jar(), 7));
    g.insert_dependency(co("g:b:1"), co("g:a:1"), Scope::Test);
    g.insert_dependency(co("g:b:1"), co("x:y,z:1"), Scope::Compile);
    g.insert_artifact(ArtifactRecord(co("g:a:2"), Packaging::jar(), 8));
    CHECK_THROWS_AS(export_text(g), Error);
    g.build_next_chains();
    auto [nodes, edges] = export_text(g);
    CHECK(nodes == kNodeHeader + "g:a:1,g,a,1,jar,7\ng:a:2,g,a,2,jar,8\ng:b:1,g,b,1,war,5\n");
    CHECK(edges == kEdgeHeader +
                       "g:a:1,g:a:2,NEXT,\n"
                       "g:b:1,g:a:1,DEPENDS_ON,test\n"
                       "g:b:1,\"x:y,z:1\",DEPENDS_ON,compile\n");
    auto back = import_text(nodes, edges);
    CHECK(back == g);
    CHECK(back.report().dangling_edges == 1);
    CHECK(export_text(back) == std::make_pair(nodes, edges));
}

TEST_CASE("import accepts reordered and renamed columns, CRLF input") {
    const std::string nodes =
        "release_timestamp,Coordinates ,version,artifactId,groupId,packaging\r\n"
        "100,g:a:1,1,a,g,JAR\r\n"
        "200,g:a:2,2,a,g,bundle\r\n";
    const std::string edges = "from,to,type,scope\r\ng:a:1,g:a:2,NEXT,\r\ng:a:2,h:b:1,depends_on,Runtime\r\n";
    HeaderRenames renames{{"Coordinates", "coordinates"}, {"from", "source"}, {"to", "target"}, {"type", "kind"}};
    auto g = import_text(nodes, edges, renames);
    CHECK(g.resolved_count() == 2);
    CHECK(g.find(co("g:a:2"))->packaging().display_name() == "bundle");
    CHECK(g.successor(co("g:a:1")) == co("g:a:2"));
    CHECK(g.dependencies_of(co("g:a:2")) == std::vector<Neighbor>{{co("h:b:1"), Scope::Runtime}});
    CHECK_FALSE(g.is_resolved(co("h:b:1")));
    CHECK(g.chains_current());
}

TEST_CASE("import errors") {
    auto code = [](const std::string& n, const std::string& e) {
        return error_of([&] { import_text(n, e); }).code();
    };
    CHECK(code("", kEdgeHeader) == ErrorCode::SchemaMismatch);
    CHECK(code("coordinates,groupId,artifactId,version,packaging\n", kEdgeHeader) == ErrorCode::SchemaMismatch);
    CHECK(code("coordinates,groupId,artifactId,version,packaging,release_timestamp,extra\n", kEdgeHeader) ==
          ErrorCode::SchemaMismatch);
    CHECK(code("coordinates,coordinates,artifactId,version,packaging,release_timestamp\n", kEdgeHeader) ==
          ErrorCode::SchemaMismatch);
    CHECK(code(kNodeHeader, "source,target,kind\n") == ErrorCode::SchemaMismatch);

    auto line_of = [](const std::string& n, const std::string& e) {
        try {
            import_text(n, e);
        } catch (const RowError& err) {
            return err.line();
        }
        return std::size_t{0};
    };
    const std::string ok = kNodeHeader + "g:a:1,g,a,1,jar,1\ng:a:2,g,a,2,jar,2\n";
    CHECK(line_of(kNodeHeader + "g:a:1,g,a,1,jar,1\ng:a,g,a,2,jar,2\n", kEdgeHeader) == 3);
    CHECK(line_of(kNodeHeader + "g:a:1,g,a,1,jar,-5\n", kEdgeHeader) == 2);
    CHECK(line_of(kNodeHeader + "g:a:1,g,a,1,jar,x\n", kEdgeHeader) == 2);
    CHECK(line_of(kNodeHeader + "g:a:1,g,b,1,jar,1\n", kEdgeHeader) == 2);
    CHECK(line_of(kNodeHeader + "g:a:1,g,a,1,\"ja\nr\",1\ng:a:2,g,a,2,jar\n", kEdgeHeader) == 4);
    CHECK(line_of(ok, kEdgeHeader + "g:a:1,g:a:2,DEPENDS_ON,testing\n") == 2);
    CHECK(line_of(ok, kEdgeHeader + "g:a:1,g:a:2,DEPENDS_ON,test\ng:a:1,g:a:2,USES,test\n") == 3);
    CHECK(line_of(ok, kEdgeHeader + "g:a:1,g:a:2,NEXT,test\n") == 2);
    CHECK(line_of(ok, kEdgeHeader + "g:a:1,g:a:1,DEPENDS_ON,test\n") == 2);
    CHECK(line_of(ok, kEdgeHeader + "q:q:1,g:a:1,DEPENDS_ON,test\n") == 2);

    CHECK(code(ok, kEdgeHeader + "g:a:1,g:a:2,NEXT,\ng:a:2,g:a:1,NEXT,\n") == ErrorCode::ChainViolation);
    CHECK(code(ok, kEdgeHeader + "g:a:1,g:a:3,NEXT,\n") == ErrorCode::ChainViolation);
}

TEST_CASE("snapshot and corpus directories") {
    testing::TempDir tmp;
    DependencyGraph g;
    g.insert_artifact(ArtifactRecord(co("g:a:1"), Packaging::jar(), 1));
    g.build_next_chains();
    save_snapshot(g, tmp.path() / "snap");
    CHECK(load_snapshot(tmp.path() / "snap") == g);
    CHECK(error_of([&] { load_snapshot(tmp.path() / "missing"); }).code() == ErrorCode::IoError);

    const auto root = tmp.path() / "corpus";
    std::filesystem::create_directories(root);
    CHECK(load_corpus(root).documents.empty());
    CHECK(error_of([&] { load_corpus(tmp.path() / "nope"); }).code() == ErrorCode::IoError);

    CHECK(corpus_dir_of(root, co("org.apache.maven:core:3.5.0")) == root / "org" / "apache" / "maven" / "core" / "3.5.0");
    auto write = [&](const char* c, const char* stamp) {
        const auto dir = corpus_dir_of(root, co(c));
        std::filesystem::create_directories(dir);
        std::ofstream(dir / "pom.xml") << write_pom(ParsedPom{co(c), Packaging::jar(), {}});
        if (stamp != nullptr) std::ofstream(dir / "timestamp") << stamp;
    };
    write("org.b:x:1", "1536192000000\n");
    auto one = load_corpus(root);
    REQUIRE(one.documents.size() == 1);
    CHECK(one.documents[0].release_timestamp == 1536192000000);
    CHECK(parse_pom(one.documents[0].doc).coordinates == co("org.b:x:1"));

    write("org.a:y:2", nullptr);
    write("org.a:y:1", "12");
    write("org.c:z:1", "not a number");
    auto all = load_corpus(root);
    REQUIRE(all.documents.size() == 2);
    CHECK(parse_pom(all.documents[0].doc).coordinates == co("org.a:y:1"));
    CHECK(parse_pom(all.documents[1].doc).coordinates == co("org.b:x:1"));
    CHECK(all.errors.size() == 2);
}

TEST_CASE("export import export is a fixpoint on random corpora") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        testing::CorpusOptions opt;
        opt.artifacts = 5 + static_cast<std::size_t>(trial) * 7;
        opt.max_edges = opt.artifacts * 4;
        opt.equal_version_ties = trial % 3 == 0;
        const auto g = testing::ingest(testing::random_corpus(rng, opt));
        const auto first = export_text(g);
        const auto back = import_text(first.first, first.second);
        REQUIRE(back == g);
        REQUIRE(compute_stats(back) == compute_stats(g));
        REQUIRE(export_text(back) == first);
    }
}
