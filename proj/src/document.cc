#include <blstate/document.hh>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace blstate {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string & message) :
    std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
    line_(line), column_(column), message_(message)
{
}

namespace {

using Json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
            ++column;
        }
    }
    return {line, column};
}

/// Byte offsets of every value in an already well-formed JSON text, keyed
/// by JSON pointer. Also reports duplicate object keys, which the DOM
/// parser would silently merge.
class OffsetIndex {
public:
    explicit OffsetIndex(std::string_view text) : text_(text) { value(""); }

    std::size_t at(const std::string & pointer) const
    {
        const auto it = offsets_.find(pointer);
        return it == offsets_.end() ? 0 : it->second;
    }

    std::optional<std::size_t> duplicate() const { return duplicate_; }

private:
    void skip_ws()
    {
        while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r'))
            ++i_;
    }

    std::string string_token()
    {
        const auto start = i_++;
        while (text_[i_] != '"')
            i_ += text_[i_] == '\\' ? 2 : 1;
        ++i_;
        return Json::parse(text_.substr(start, i_ - start)).get<std::string>();
    }

    static std::string escape(const std::string & key)
    {
        std::string out;
        for (char c : key)
            out += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
        return out;
    }

    void value(const std::string & pointer)
    {
        skip_ws();
        offsets_[pointer] = i_;
        const char c = text_[i_];
        if (c == '{') {
            ++i_;
            std::set<std::string> seen;
            skip_ws();
            if (text_[i_] == '}') {
                ++i_;
                return;
            }
            while (true) {
                skip_ws();
                const auto key_at = i_;
                const auto key = string_token();
                if (! seen.insert(key).second && ! duplicate_)
                    duplicate_ = key_at;
                skip_ws();
                ++i_; // ':'
                value(pointer + "/" + escape(key));
                skip_ws();
                if (text_[i_++] == '}')
                    return;
            }
        }
        if (c == '[') {
            ++i_;
            skip_ws();
            if (text_[i_] == ']') {
                ++i_;
                return;
            }
            for (std::size_t k = 0;; ++k) {
                value(pointer + "/" + std::to_string(k));
                skip_ws();
                if (text_[i_++] == ']')
                    return;
            }
        }
        if (c == '"') {
            string_token();
            return;
        }
        while (i_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[i_]) == std::string_view::npos)
            ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    std::map<std::string, std::size_t> offsets_;
    std::optional<std::size_t> duplicate_;
};

class Reader {
public:
    Reader(std::string_view text, const OffsetIndex & index) : text_(text), index_(index) {}

    [[noreturn]] void error(const std::string & pointer, const std::string & message) const
    {
        const auto [line, column] = line_column(text_, index_.at(pointer));
        throw ParseError(line, column, message + (pointer.empty() ? "" : " at " + pointer));
    }

    const Json & object(const Json & j, const std::string & pointer, std::initializer_list<std::string_view> allowed) const
    {
        if (! j.is_object())
            error(pointer, "expected an object");
        for (const auto & [key, _] : j.items())
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                error(pointer + "/" + key, "unknown field '" + key + "'");
        return j;
    }

    const Json & array(const Json & j, const std::string & pointer) const
    {
        if (! j.is_array())
            error(pointer, "expected an array");
        if (j.empty())
            error(pointer, "empty array");
        return j;
    }

    std::string string(const Json & j, const std::string & pointer) const
    {
        if (! j.is_string())
            error(pointer, "expected a string");
        return j.get<std::string>();
    }

    std::vector<Element> labelled(const Json & j, const std::string & pointer, const std::map<std::string, Element> & labels) const
    {
        std::vector<Element> out;
        array(j, pointer);
        for (std::size_t k = 0; k < j.size(); ++k) {
            const auto at = pointer + "/" + std::to_string(k);
            const auto s = string(j[k], at);
            const auto it = labels.find(s);
            if (it == labels.end())
                error(at, "unknown label '" + s + "'");
            out.push_back(it->second);
        }
        return out;
    }

    std::vector<Element> grid(const Json & j, const std::string & pointer, const std::map<std::string, Element> & labels) const
    {
        const auto n = labels.size();
        array(j, pointer);
        if (j.size() != n)
            error(pointer, "expected " + std::to_string(n) + " rows");
        std::vector<Element> out;
        for (std::size_t r = 0; r < n; ++r) {
            const auto at = pointer + "/" + std::to_string(r);
            const auto row = labelled(j[r], at, labels);
            if (row.size() != n)
                error(at, "expected " + std::to_string(n) + " entries");
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

private:
    std::string_view text_;
    const OffsetIndex & index_;
};

std::string quote(const std::string & s) { return Json(s).dump(); }

std::string row(const std::vector<std::string> & labels, std::span<const Element> entries)
{
    std::string out = "[";
    for (std::size_t i = 0; i < entries.size(); ++i)
        out += (i ? ", " : "") + quote(labels.at(entries[i]));
    return out + "]";
}

} // namespace

AlgebraDocument parse_algebra(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error & e) {
        const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        const auto colon = what.find("syntax error");
        throw ParseError(line, column, colon == std::string::npos ? what : what.substr(colon));
    }
    const OffsetIndex index(text);
    const Reader r(text, index);
    if (const auto dup = index.duplicate()) {
        const auto [line, column] = line_column(text, *dup);
        throw ParseError(line, column, "duplicate key");
    }

    r.object(root, "", {"format", "name", "labels", "tables", "operators", "states"});
    if (! root.contains("format"))
        r.error("", "missing field 'format'");
    if (r.string(root["format"], "/format") != document_format)
        r.error("/format", "unsupported format, expected '" + std::string(document_format) + "'");

    AlgebraDocument doc;
    if (root.contains("name"))
        doc.name = r.string(root["name"], "/name");

    if (! root.contains("labels"))
        r.error("", "missing field 'labels'");
    r.array(root["labels"], "/labels");
    std::map<std::string, Element> labels;
    for (std::size_t k = 0; k < root["labels"].size(); ++k) {
        const auto at = "/labels/" + std::to_string(k);
        auto s = r.string(root["labels"][k], at);
        if (s.empty())
            r.error(at, "empty label");
        if (! labels.emplace(s, static_cast<Element>(k)).second)
            r.error(at, "repeated label '" + s + "'");
        doc.labels.push_back(std::move(s));
    }

    if (! root.contains("tables"))
        r.error("", "missing field 'tables'");
    const auto & tables = r.object(root["tables"], "/tables", {"meet", "join", "prod", "impl"});
    if (! tables.contains("prod"))
        r.error("/tables", "missing table 'prod'");
    if (tables.contains("meet") != tables.contains("join"))
        r.error("/tables", "'meet' and 'join' must be given together");
    doc.prod = r.grid(tables["prod"], "/tables/prod", labels);
    if (tables.contains("meet")) {
        doc.meet = r.grid(tables["meet"], "/tables/meet", labels);
        doc.join = r.grid(tables["join"], "/tables/join", labels);
    }
    if (tables.contains("impl"))
        doc.impl = r.grid(tables["impl"], "/tables/impl", labels);

    std::set<std::string> names;
    if (root.contains("operators")) {
        r.array(root["operators"], "/operators");
        for (std::size_t k = 0; k < root["operators"].size(); ++k) {
            const auto at = "/operators/" + std::to_string(k);
            const auto & op = r.object(root["operators"][k], at, {"name", "map"});
            if (! op.contains("name") || ! op.contains("map"))
                r.error(at, "operator needs 'name' and 'map'");
            auto name = r.string(op["name"], at + "/name");
            if (! names.insert(name).second)
                r.error(at + "/name", "repeated operator name '" + name + "'");
            auto map = r.labelled(op["map"], at + "/map", labels);
            if (map.size() != labels.size())
                r.error(at + "/map", "expected " + std::to_string(labels.size()) + " entries");
            doc.operators.push_back({std::move(name), std::move(map)});
        }
    }

    names.clear();
    if (root.contains("states")) {
        r.array(root["states"], "/states");
        for (std::size_t k = 0; k < root["states"].size(); ++k) {
            const auto at = "/states/" + std::to_string(k);
            const auto & st = r.object(root["states"][k], at, {"name", "values"});
            if (! st.contains("name") || ! st.contains("values"))
                r.error(at, "state needs 'name' and 'values'");
            auto name = r.string(st["name"], at + "/name");
            if (! names.insert(name).second)
                r.error(at + "/name", "repeated state name '" + name + "'");
            r.array(st["values"], at + "/values");
            if (st["values"].size() != labels.size())
                r.error(at + "/values", "expected " + std::to_string(labels.size()) + " entries");
            StateValues values;
            for (std::size_t v = 0; v < labels.size(); ++v) {
                const auto vat = at + "/values/" + std::to_string(v);
                try {
                    values.push_back(parse_rational(r.string(st["values"][v], vat)));
                } catch (const std::invalid_argument & e) {
                    r.error(vat, e.what());
                }
            }
            doc.states.push_back({std::move(name), std::move(values)});
        }
    }
    return doc;
}

std::string serialize_algebra(const AlgebraDocument & doc)
{
    const auto n = doc.labels.size();
    std::ostringstream out;
    out << "{\n  \"format\": " << quote(std::string(document_format));
    if (doc.name)
        out << ",\n  \"name\": " << quote(*doc.name);
    out << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < n; ++i)
        out << (i ? ", " : "") << quote(doc.labels[i]);
    out << "],\n  \"tables\": {";
    bool first = true;
    auto table = [&](const char * key, const std::vector<Element> & t) {
        out << (first ? "\n" : ",\n") << "    \"" << key << "\": [\n";
        first = false;
        for (std::size_t r = 0; r < n; ++r)
            out << "      " << row(doc.labels, std::span(t).subspan(r * n, n)) << (r + 1 < n ? ",\n" : "\n");
        out << "    ]";
    };
    if (doc.meet)
        table("meet", *doc.meet);
    if (doc.join)
        table("join", *doc.join);
    table("prod", doc.prod);
    if (doc.impl)
        table("impl", *doc.impl);
    out << "\n  }";
    if (! doc.operators.empty()) {
        out << ",\n  \"operators\": [";
        for (std::size_t k = 0; k < doc.operators.size(); ++k)
            out << (k ? ",\n" : "\n") << "    {\"name\": " << quote(doc.operators[k].name)
                << ", \"map\": " << row(doc.labels, doc.operators[k].map) << "}";
        out << "\n  ]";
    }
    if (! doc.states.empty()) {
        out << ",\n  \"states\": [";
        for (std::size_t k = 0; k < doc.states.size(); ++k) {
            out << (k ? ",\n" : "\n") << "    {\"name\": " << quote(doc.states[k].name) << ", \"values\": [";
            for (std::size_t v = 0; v < doc.states[k].values.size(); ++v)
                out << (v ? ", " : "") << quote(to_string(doc.states[k].values[v]));
            out << "]}";
        }
        out << "\n  ]";
    }
    out << "\n}\n";
    return out.str();
}

AlgebraDocument from_algebra(const FiniteBLAlgebra & a, std::optional<std::string> name,
    std::vector<NamedOperator> operators, std::vector<NamedState> states)
{
    const auto & t = a.tables();
    return {std::move(name), t.labels, t.meet, t.join, t.prod, t.impl, std::move(operators), std::move(states)};
}

LoadedAlgebra load(const AlgebraDocument & doc, std::string fallback_name)
{
    const auto n = doc.labels.size();
    OperationTables t;
    t.labels = doc.labels;
    t.meet = doc.meet ? *doc.meet : chain_meet(n);
    t.join = doc.join ? *doc.join : chain_join(n);
    t.prod = doc.prod;
    infer_bounds(t);
    if (doc.impl) {
        t.impl = *doc.impl;
    } else {
        try {
            t.impl = residuum_from_monoid(n, t.meet, t.prod);
        } catch (const NoResiduum & e) {
            throw ValidationError(AxiomViolation{Axiom::adjointness, "residuum exists", {e.a, e.b}});
        }
    }
    return {doc.name.value_or(std::move(fallback_name)), seal(std::move(t)), doc.operators, doc.states};
}

AlgebraDocument read_document(const std::filesystem::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError(1, 1, "cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_algebra(text.str());
}

} // namespace blstate
