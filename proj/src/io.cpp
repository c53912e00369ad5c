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
#include "mavengraph/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mavengraph/error.hpp"
#include "text_util.hpp"

namespace mavengraph {

namespace {

constexpr std::string_view kDependsOn = "DEPENDS_ON";
constexpr std::string_view kNext = "NEXT";

std::optional<std::int64_t> parse_int(std::string_view text) {
    text = trim(text);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return v;
}

void check_stream(const std::ostream& out, std::string_view what) {
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + std::string(what));
}

// Position of each schema column in the input rows.
template <std::size_t N>
std::array<std::size_t, N> read_header(CsvReader& reader, const std::string_view (&columns)[N],
                                       const HeaderRenames& renames, std::string_view file, std::size_t& width) {
    CsvReader::Record header;
    if (!reader.next(header)) throw Error(ErrorCode::SchemaMismatch, std::string(file) + ": missing header row");
    if (!header.fields.empty() && header.fields[0].rfind("\xEF\xBB\xBF", 0) == 0) header.fields[0].erase(0, 3);
    std::array<std::size_t, N> pos;
    pos.fill(SIZE_MAX);
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        std::string name(trim(header.fields[i]));
        if (auto it = renames.find(name); it != renames.end()) name = it->second;
        auto col = std::find(std::begin(columns), std::end(columns), name);
        if (col == std::end(columns)) {
            throw Error(ErrorCode::SchemaMismatch, std::string(file) + ": unknown column '" + name + "'");
        }
        auto& slot = pos[static_cast<std::size_t>(col - std::begin(columns))];
        if (slot != SIZE_MAX) {
            throw Error(ErrorCode::SchemaMismatch, std::string(file) + ": duplicate column '" + name + "'");
        }
        slot = i;
    }
    for (std::size_t c = 0; c < N; ++c) {
        if (pos[c] == SIZE_MAX) {
            throw Error(ErrorCode::SchemaMismatch, std::string(file) + ": missing column '" + std::string(columns[c]) + "'");
        }
    }
    width = header.fields.size();
    return pos;
}

template <typename T, typename F>
T row_value(std::size_t line, F&& f) {
    try {
        return f();
    } catch (const RowError&) {
        throw;
    } catch (const Error& e) {
        throw RowError(line, e.what());
    }
}

void read_nodes(std::istream& in, const HeaderRenames& renames, DependencyGraph& g) {
    CsvReader reader(in);
    std::size_t width = 0;
    const auto pos = read_header(reader, kNodeColumns, renames, "nodes", width);
    CsvReader::Record row;
    while (reader.next(row)) {
        if (row.fields.size() != width) {
            throw RowError(row.line, "expected " + std::to_string(width) + " fields, got " + std::to_string(row.fields.size()));
        }
        auto field = [&](std::size_t c) -> const std::string& { return row.fields[pos[c]]; };
        auto record = row_value<ArtifactRecord>(row.line, [&] {
            Coordinates c = Coordinates::parse(field(0));
            if (c.group_id() != trim(field(1)) || c.artifact_id() != trim(field(2)) || c.version() != trim(field(3))) {
                throw RowError(row.line, "coordinates do not match groupId/artifactId/version");
            }
            auto ts = parse_int(field(5));
            if (!ts) throw RowError(row.line, "bad release_timestamp '" + field(5) + "'");
            return ArtifactRecord(std::move(c), Packaging::parse(trim(field(4))), *ts);
        });
        g.insert_artifact(record);
    }
}

void read_edges(std::istream& in, const HeaderRenames& renames, DependencyGraph& g) {
    CsvReader reader(in);
    std::size_t width = 0;
    const auto pos = read_header(reader, kEdgeColumns, renames, "edges", width);
    std::vector<std::pair<Coordinates, Coordinates>> next;
    CsvReader::Record row;
    while (reader.next(row)) {
        if (row.fields.size() != width) {
            throw RowError(row.line, "expected " + std::to_string(width) + " fields, got " + std::to_string(row.fields.size()));
        }
        auto field = [&](std::size_t c) -> const std::string& { return row.fields[pos[c]]; };
        const Coordinates source = row_value<Coordinates>(row.line, [&] { return Coordinates::parse(field(0)); });
        const Coordinates target = row_value<Coordinates>(row.line, [&] { return Coordinates::parse(field(1)); });
        const std::string kind = ascii_lower(trim(field(2)));
        const std::string_view scope_text = trim(field(3));
        if (kind == "next") {
            if (!scope_text.empty()) throw RowError(row.line, "NEXT rows carry no scope");
            next.emplace_back(source, target);
        } else if (kind == "depends_on") {
            const Scope scope = row_value<Scope>(row.line, [&] { return scope_from_string(scope_text); });
            if (!g.is_resolved(source)) throw RowError(row.line, "source " + source.str() + " is not a node");
            row_value<int>(row.line, [&] {
                g.insert_dependency(source, target, scope);
                return 0;
            });
        } else {
            throw RowError(row.line, "unknown edge kind '" + field(2) + "'");
        }
    }
    g.load_next_chains(next);
}

}  // namespace

bool CsvReader::next(Record& out) {
    std::streambuf* buf = in_.rdbuf();
    constexpr int kEof = std::char_traits<char>::eof();
    out.fields.clear();
    out.line = line_;
    std::string field;
    bool in_quotes = false;
    bool after_quote = false;  // the current field was quoted and has closed
    bool started = false;      // anything belonging to this record was seen
    for (;;) {
        const int c = buf == nullptr ? kEof : buf->sbumpc();
        if (c == kEof) {
            if (in_quotes) throw RowError(out.line, "unterminated quoted field");
            if (!started) return false;
            out.fields.push_back(std::move(field));
            return true;
        }
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (buf->sgetc() == '"') {
                    buf->sbumpc();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                    after_quote = true;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
            continue;
        }
        bool newline = ch == '\n';
        if (ch == '\r' && buf->sgetc() == '\n') {
            buf->sbumpc();
            newline = true;
        }
        if (newline) {
            ++line_;
            if (!started) {
                out.line = line_;
                continue;
            }
            out.fields.push_back(std::move(field));
            return true;
        }
        started = true;
        if (ch == ',') {
            out.fields.push_back(std::move(field));
            field.clear();
            after_quote = false;
        } else if (ch == '"') {
            if (!field.empty() || after_quote) throw RowError(line_, "unexpected '\"' in unquoted field");
            in_quotes = true;
        } else {
            if (after_quote) throw RowError(line_, "characters after closing quote");
            field.push_back(ch);
        }
    }
}

void write_csv_row(std::ostream& out, const std::vector<std::string_view>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) line.push_back(',');
        const std::string_view f = fields[i];
        if (f.find_first_of(",\"\r\n") == std::string_view::npos) {
            line.append(f);
            continue;
        }
        line.push_back('"');
        for (char c : f) {
            if (c == '"') line.push_back('"');
            line.push_back(c);
        }
        line.push_back('"');
    }
    line.push_back('\n');
    out << line;
}

ExportCounts export_csv(const DependencyGraph& g, std::ostream& nodes, std::ostream& edges) {
    if (!g.chains_current()) throw Error(ErrorCode::ChainsNotBuilt, "export requires built NEXT chains");
    ExportCounts counts;
    write_csv_row(nodes, {std::begin(kNodeColumns), std::end(kNodeColumns)});
    write_csv_row(edges, {std::begin(kEdgeColumns), std::end(kEdgeColumns)});
    for (const auto& [c, node] : g.nodes()) {
        if (!node.resolved()) continue;
        const std::string coords = c.str();
        const std::string packaging = node.record->packaging().csv_name();
        const std::string ts = std::to_string(node.record->release_timestamp());
        write_csv_row(nodes, {coords, c.group_id(), c.artifact_id(), c.version(), packaging, ts});
        ++counts.nodes;

        if (auto out = g.out_edges().find(c); out != g.out_edges().end()) {
            for (const auto& [target, scope] : out->second) {
                write_csv_row(edges, {coords, target.str(), kDependsOn, scope_csv_name(scope)});
                ++counts.edges;
            }
        }
        if (auto next = g.next_edges().find(c); next != g.next_edges().end()) {
            write_csv_row(edges, {coords, next->second.str(), kNext, ""});
            ++counts.edges;
        }
    }
    check_stream(nodes, "nodes");
    check_stream(edges, "edges");
    return counts;
}

DependencyGraph import_csv(std::istream& nodes, std::istream& edges, const HeaderRenames& renames) {
    DependencyGraph g;
    read_nodes(nodes, renames, g);
    read_edges(edges, renames, g);
    return g;
}

ExportCounts save_snapshot(const DependencyGraph& g, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
    std::ofstream nodes(dir / "nodes.csv", std::ios::binary | std::ios::trunc);
    std::ofstream edges(dir / "edges.csv", std::ios::binary | std::ios::trunc);
    if (!nodes || !edges) throw Error(ErrorCode::IoError, "cannot write snapshot in " + dir.string());
    auto counts = export_csv(g, nodes, edges);
    nodes.close();
    edges.close();
    check_stream(nodes, (dir / "nodes.csv").string());
    check_stream(edges, (dir / "edges.csv").string());
    return counts;
}

DependencyGraph load_snapshot(const std::filesystem::path& dir, const HeaderRenames& renames) {
    std::ifstream nodes(dir / "nodes.csv", std::ios::binary);
    std::ifstream edges(dir / "edges.csv", std::ios::binary);
    if (!nodes || !edges) throw Error(ErrorCode::IoError, "cannot read snapshot in " + dir.string());
    return import_csv(nodes, edges, renames);
}

std::filesystem::path corpus_dir_of(const std::filesystem::path& root, const Coordinates& c) {
    std::filesystem::path p = root;
    std::string_view group = c.group_id();
    for (std::size_t start = 0;;) {
        const std::size_t dot = group.find('.', start);
        p /= std::string(group.substr(start, dot - start));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return p / c.artifact_id() / c.version();
}

CorpusDocument read_corpus_dir(const std::filesystem::path& dir) {
    auto slurp = [](const std::filesystem::path& file) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw Error(ErrorCode::IoError, "cannot read " + file.string());
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    };
    CorpusDocument out;
    out.doc.source = (dir / "pom.xml").string();
    out.doc.text = slurp(dir / "pom.xml");
    const std::string stamp = slurp(dir / "timestamp");
    auto ts = parse_int(stamp);
    if (!ts || *ts < 0) throw Error(ErrorCode::IoError, "bad timestamp in " + (dir / "timestamp").string());
    out.release_timestamp = *ts;
    return out;
}

CorpusListing load_corpus(const std::filesystem::path& root) {
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec)) {
        throw Error(ErrorCode::IoError, "corpus root " + root.string() + " is not a directory");
    }
    CorpusListing listing;
    std::vector<std::filesystem::path> pending{root};
    while (!pending.empty()) {
        const auto dir = std::move(pending.back());
        pending.pop_back();
        if (std::filesystem::exists(dir / "pom.xml", ec) || std::filesystem::exists(dir / "timestamp", ec)) {
            try {
                listing.documents.push_back(read_corpus_dir(dir));
            } catch (const Error& e) {
                listing.errors.push_back({dir.string(), e.what()});
            }
            continue;
        }
        std::vector<std::filesystem::path> children;
        std::filesystem::directory_iterator it(dir, ec);
        if (ec) {
            listing.errors.push_back({dir.string(), ec.message()});
            continue;
        }
        for (const auto& entry : it) {
            if (entry.is_directory(ec)) children.push_back(entry.path());
        }
        std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) {
            return a.filename().string() < b.filename().string();
        });
        pending.insert(pending.end(), children.rbegin(), children.rend());
    }
    return listing;
}

}  // namespace mavengraph
