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
#include "mavengraph/pom.hpp"

#include <expat.h>

#include <memory>
#include <set>
#include <utility>

#include "mavengraph/error.hpp"
#include "text_util.hpp"

namespace mavengraph {

namespace {

// Hard cap on one interpolated string; nested properties can otherwise grow
// exponentially.
constexpr std::size_t kMaxExpansion = 1 << 16;

class Expander {
public:
    explicit Expander(const PropertyMap& props) : props_(props) {}

    Interpolation run(std::string_view text) {
        Interpolation out;
        expand(text, out);
        return out;
    }

private:
    void expand(std::string_view text, Interpolation& out) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            const std::size_t open = text.find("${", pos);
            const std::size_t close = open == std::string_view::npos ? open : text.find('}', open + 2);
            if (close == std::string_view::npos) {
                append(out, text.substr(pos));
                return;
            }
            append(out, text.substr(pos, open - pos));
            const std::string_view key = text.substr(open + 2, close - open - 2);
            substitute(key, text.substr(open, close - open + 1), out);
            pos = close + 1;
        }
    }

    void substitute(std::string_view key, std::string_view verbatim, Interpolation& out) {
        auto it = props_.find(key);
        if (it == props_.end() || active_.count(it->first) != 0) {
            out.unresolved = true;
            append(out, verbatim);
            return;
        }
        auto memo = memo_.find(it->first);
        if (memo == memo_.end()) {
            active_.insert(it->first);
            Interpolation value;
            expand(it->second, value);
            active_.erase(it->first);
            memo = memo_.emplace(it->first, std::move(value)).first;
        }
        out.unresolved = out.unresolved || memo->second.unresolved;
        append(out, memo->second.text);
    }

    static void append(Interpolation& out, std::string_view piece) {
        if (out.text.size() + piece.size() > kMaxExpansion) {
            out.unresolved = true;
            piece = piece.substr(0, kMaxExpansion - out.text.size());
        }
        out.text.append(piece);
    }

    const PropertyMap& props_;
    std::set<std::string, std::less<>> active_;
    std::map<std::string, Interpolation, std::less<>> memo_;
};

// Flat element tree: nodes refer to children by index, so deep documents
// neither recurse on destruction nor on traversal.
struct Element {
    std::string name;
    std::string text;
    std::vector<std::size_t> children;
};

struct Tree {
    std::vector<Element> nodes;

    const Element* child(const Element& parent, std::string_view name) const {
        for (std::size_t i : parent.children) {
            if (nodes[i].name == name) return &nodes[i];
        }
        return nullptr;
    }

    std::optional<std::string> text_of(const Element& parent, std::string_view name) const {
        const Element* e = child(parent, name);
        if (e == nullptr) return std::nullopt;
        return std::string(trim(e->text));
    }
};

struct ParseState {
    Tree tree;
    std::vector<std::size_t> stack;
    bool rejected = false;
    std::string reject_reason;
    XML_Parser parser = nullptr;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char**) {
    auto* st = static_cast<ParseState*>(data);
    const std::size_t index = st->tree.nodes.size();
    st->tree.nodes.push_back(Element{name, {}, {}});
    if (!st->stack.empty()) st->tree.nodes[st->stack.back()].children.push_back(index);
    st->stack.push_back(index);
}

void XMLCALL on_end(void* data, const XML_Char*) {
    static_cast<ParseState*>(data)->stack.pop_back();
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
    auto* st = static_cast<ParseState*>(data);
    if (!st->stack.empty()) st->tree.nodes[st->stack.back()].text.append(s, static_cast<std::size_t>(len));
}

void XMLCALL on_doctype(void* data, const XML_Char*, const XML_Char*, const XML_Char*, int) {
    auto* st = static_cast<ParseState*>(data);
    st->rejected = true;
    st->reject_reason = "document type declarations are not accepted";
    XML_StopParser(st->parser, XML_FALSE);
}

[[noreturn]] void corrupt(const PomDocument& doc, const std::string& why) {
    throw Error(ErrorCode::CorruptPom, (doc.source.empty() ? std::string("pom") : doc.source) + ": " + why);
}

Tree read_tree(const PomDocument& doc) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate(nullptr), &XML_ParserFree);
    if (!parser) throw Error(ErrorCode::CorruptPom, "cannot allocate XML parser");
    ParseState st;
    st.parser = parser.get();
    XML_SetUserData(st.parser, &st);
    XML_SetElementHandler(st.parser, on_start, on_end);
    XML_SetCharacterDataHandler(st.parser, on_text);
    XML_SetStartDoctypeDeclHandler(st.parser, on_doctype);

    const auto status = XML_Parse(st.parser, doc.text.data(), static_cast<int>(doc.text.size()), XML_TRUE);
    if (st.rejected) corrupt(doc, st.reject_reason);
    if (status != XML_STATUS_OK) {
        corrupt(doc, "line " + std::to_string(XML_GetCurrentLineNumber(st.parser)) + ": " +
                         XML_ErrorString(XML_GetErrorCode(st.parser)));
    }
    if (st.tree.nodes.empty() || st.tree.nodes.front().name != "project") {
        corrupt(doc, "root element is not <project>");
    }
    return std::move(st.tree);
}

struct ParentRef {
    std::optional<std::string> group_id;
    std::optional<std::string> artifact_id;
    std::optional<std::string> version;
};

void add_properties(const Tree& tree, PropertyMap& props) {
    const Element* block = tree.child(tree.nodes.front(), "properties");
    if (block == nullptr) return;
    for (std::size_t i : block->children) {
        props[tree.nodes[i].name] = std::string(trim(tree.nodes[i].text));
    }
}

// The parent contributes properties only; a missing or unreadable parent
// contributes nothing.
void add_parent_properties(const ParentRef& ref, const ParentLookup& lookup, PropertyMap& props) {
    if (!lookup || !ref.group_id || !ref.artifact_id || !ref.version) return;
    std::optional<PomDocument> doc;
    try {
        doc = lookup(Coordinates(*ref.group_id, *ref.artifact_id, *ref.version));
    } catch (const Error&) {
        return;
    }
    if (!doc) return;
    try {
        add_properties(read_tree(*doc), props);
    } catch (const Error&) {
    }
}

std::string required(const PomDocument& doc, const PropertyMap& props, const std::optional<std::string>& raw,
                     std::string_view what) {
    if (!raw || raw->empty()) corrupt(doc, "missing " + std::string(what));
    Interpolation value = interpolate(*raw, props);
    std::string_view text = trim(value.text);
    if (value.unresolved) corrupt(doc, "unresolved " + std::string(what) + " '" + *raw + "'");
    if (text.empty()) corrupt(doc, "empty " + std::string(what));
    if (text.find(':') != std::string_view::npos) corrupt(doc, std::string(what) + " contains ':'");
    return std::string(text);
}

DependencyDecl read_dependency(const PomDocument& doc, const Tree& tree, const Element& dep,
                               const PropertyMap& props) {
    DependencyDecl out;
    out.group_id = required(doc, props, tree.text_of(dep, "groupId"), "dependency groupId");
    out.artifact_id = required(doc, props, tree.text_of(dep, "artifactId"), "dependency artifactId");
    if (auto raw = tree.text_of(dep, "version"); raw && !raw->empty()) {
        Interpolation v = interpolate(*raw, props);
        std::string_view text = trim(v.text);
        if (!v.unresolved && !text.empty()) {
            if (text.find(':') != std::string_view::npos) corrupt(doc, "dependency version contains ':'");
            out.version = std::string(text);
        }
    }
    if (auto raw = tree.text_of(dep, "scope"); raw && !raw->empty()) {
        try {
            out.scope = scope_from_string(trim(interpolate(*raw, props).text));
        } catch (const Error& e) {
            corrupt(doc, e.what());
        }
    }
    if (auto raw = tree.text_of(dep, "optional")) {
        out.optional = ascii_lower(trim(interpolate(*raw, props).text)) == "true";
    }
    return out;
}

void append_escaped(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
}

void element(std::string& out, int indent, std::string_view name, std::string_view value) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += '<';
    out += name;
    out += '>';
    append_escaped(out, value);
    out += "</";
    out += name;
    out += ">\n";
}

}  // namespace

Interpolation interpolate(std::string_view text, const PropertyMap& properties) {
    return Expander(properties).run(text);
}

ParsedPom parse_pom(const PomDocument& doc, const ParentLookup& parent_lookup) {
    const Tree tree = read_tree(doc);
    const Element& root = tree.nodes.front();

    ParentRef parent;
    if (const Element* p = tree.child(root, "parent")) {
        parent.group_id = tree.text_of(*p, "groupId");
        parent.artifact_id = tree.text_of(*p, "artifactId");
        parent.version = tree.text_of(*p, "version");
    }
    auto own_or_parent = [&](std::string_view name, const std::optional<std::string>& inherited) {
        auto own = tree.text_of(root, name);
        return own && !own->empty() ? own : inherited;
    };
    const auto raw_group = own_or_parent("groupId", parent.group_id);
    const auto raw_artifact = tree.text_of(root, "artifactId");
    const auto raw_version = own_or_parent("version", parent.version);

    PropertyMap props;
    add_parent_properties(parent, parent_lookup, props);
    add_properties(tree, props);
    auto builtin = [&](const char* key, const std::optional<std::string>& value) {
        if (value) props[key] = *value;
    };
    builtin("project.groupId", raw_group);
    builtin("project.artifactId", raw_artifact);
    builtin("project.version", raw_version);
    builtin("project.parent.groupId", parent.group_id);
    builtin("project.parent.artifactId", parent.artifact_id);
    builtin("project.parent.version", parent.version);

    Coordinates coords(required(doc, props, raw_group, "groupId"), required(doc, props, raw_artifact, "artifactId"),
                       required(doc, props, raw_version, "version"));

    Packaging packaging = Packaging::jar();
    if (auto raw = tree.text_of(root, "packaging")) {
        packaging = Packaging::parse(trim(interpolate(*raw, props).text));
    }

    std::vector<DependencyDecl> deps;
    if (const Element* block = tree.child(root, "dependencies")) {
        for (std::size_t i : block->children) {
            if (tree.nodes[i].name == "dependency") deps.push_back(read_dependency(doc, tree, tree.nodes[i], props));
        }
    }
    return ParsedPom{std::move(coords), std::move(packaging), std::move(deps)};
}

std::string write_pom(const ParsedPom& pom) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<project xmlns=\"http://maven.apache.org/POM/4.0.0\">\n";
    element(out, 1, "modelVersion", "4.0.0");
    element(out, 1, "groupId", pom.coordinates.group_id());
    element(out, 1, "artifactId", pom.coordinates.artifact_id());
    element(out, 1, "version", pom.coordinates.version());
    element(out, 1, "packaging", pom.packaging.csv_name());
    if (!pom.dependencies.empty()) {
        out += "  <dependencies>\n";
        for (const auto& d : pom.dependencies) {
            out += "    <dependency>\n";
            element(out, 3, "groupId", d.group_id);
            element(out, 3, "artifactId", d.artifact_id);
            if (d.version) element(out, 3, "version", *d.version);
            element(out, 3, "scope", scope_csv_name(d.scope));
            if (d.optional) element(out, 3, "optional", "true");
            out += "    </dependency>\n";
        }
        out += "  </dependencies>\n";
    }
    out += "</project>\n";
    return out;
}

}  // namespace mavengraph
