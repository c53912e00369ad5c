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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mavengraph/graph.hpp"
#include "mavengraph/pom.hpp"

namespace mavengraph {

// RFC 4180 records. Quoted fields may span lines; LF and CRLF both end a
// record. Throws RowError for a stray or unterminated quote.
class CsvReader {
public:
    struct Record {
        std::vector<std::string> fields;
        std::size_t line = 0;  // 1-based physical line where the record starts
    };

    explicit CsvReader(std::istream& in) : in_(in) {}

    // False at end of input. Blank lines are skipped.
    bool next(Record& out);

private:
    std::istream& in_;
    std::size_t line_ = 1;
};

// Quotes only when the field needs it. Terminates the row with LF.
void write_csv_row(std::ostream& out, const std::vector<std::string_view>& fields);

inline constexpr std::string_view kNodeColumns[] = {"coordinates", "groupId",   "artifactId",
                                                   "version",     "packaging", "release_timestamp"};
inline constexpr std::string_view kEdgeColumns[] = {"source", "target", "kind", "scope"};

struct ExportCounts {
    std::size_t nodes = 0;
    std::size_t edges = 0;
};

// Resolved nodes by coordinates; edges by (source, kind, target, scope) with
// DEPENDS_ON before NEXT. Throws Error(ChainsNotBuilt) and Error(IoError).
ExportCounts export_csv(const DependencyGraph& g, std::ostream& nodes, std::ostream& edges);

// Maps a header name found in the input to one of the schema names.
using HeaderRenames = std::map<std::string, std::string, std::less<>>;

// Column order is free, names are fixed (after renaming). NEXT rows are
// installed verbatim. Throws Error(SchemaMismatch), RowError and
// Error(ChainViolation).
DependencyGraph import_csv(std::istream& nodes, std::istream& edges, const HeaderRenames& renames = {});

// A snapshot is a directory holding nodes.csv and edges.csv.
ExportCounts save_snapshot(const DependencyGraph& g, const std::filesystem::path& dir);
DependencyGraph load_snapshot(const std::filesystem::path& dir, const HeaderRenames& renames = {});

// Corpus layout: <group with '.' as '/'>/<artifact>/<version>/ holding
// pom.xml and a `timestamp` file with the release time in epoch ms.
std::filesystem::path corpus_dir_of(const std::filesystem::path& root, const Coordinates& c);

struct CorpusDocument {
    PomDocument doc;
    EpochMillis release_timestamp = 0;
};

struct CorpusFileError {
    std::string path;
    std::string message;
};

struct CorpusListing {
    std::vector<CorpusDocument> documents;  // lexicographic path order
    std::vector<CorpusFileError> errors;
};

// Per-directory failures are collected in errors; only an unreadable root
// throws Error(IoError).
CorpusListing load_corpus(const std::filesystem::path& root);

// Reads one artifact directory; throws Error(IoError) for a missing or
// unreadable pom.xml or timestamp.
CorpusDocument read_corpus_dir(const std::filesystem::path& dir);

}  // namespace mavengraph
