#include "cubical/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cubical/common.hpp"

namespace cubical::io {

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph parse_graph(std::string_view text) {
    Graph g;
    struct PendingEdge {
        Token a, b;
        std::size_t line;
    };
    std::vector<PendingEdge> edges;
    for_each_line(text, [&](const std::vector<Token>& t, std::size_t line) {
        const std::string& kw = t[0].text;
        if (kw == "vertex") {
            if (t.size() != 2) throw InputError("expected 'vertex <id>'", line, t[0].column);
            if (g.find(t[1].text)) throw InputError("duplicate vertex '" + t[1].text + "'", line, t[1].column);
            g.add_vertex(t[1].text);
        } else if (kw == "edge") {
            if (t.size() != 3) throw InputError("expected 'edge <id> <id>'", line, t[0].column);
            edges.push_back(PendingEdge{t[1], t[2], line});
        } else if (kw == "sub") {
            // handled by parse_subsets
        } else {
            throw InputError("unknown keyword '" + kw + "'", line, t[0].column);
        }
    });
    for (const auto& e : edges) {
        const auto a = g.find(e.a.text);
        if (!a) throw InputError("undeclared vertex '" + e.a.text + "'", e.line, e.a.column);
        const auto b = g.find(e.b.text);
        if (!b) throw InputError("undeclared vertex '" + e.b.text + "'", e.line, e.b.column);
        if (*a == *b) throw InputError("loop at vertex '" + e.a.text + "'", e.line, e.a.column);
        if (g.adjacent(*a, *b)) throw InputError("duplicate edge '" + e.a.text + "' '" + e.b.text + "'", e.line, e.a.column);
        g.add_edge(*a, *b);
    }
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& name : g.names()) out << "vertex " << name << '\n';
    for (const auto& e : g.edges()) out << "edge " << g.name(e.u) << ' ' << g.name(e.v) << '\n';
    return out.str();
}

std::vector<NamedSubset> parse_subsets(std::string_view text, const Graph& g) {
    std::vector<NamedSubset> out;
    std::unordered_set<std::string> names;
    for_each_line(text, [&](const std::vector<Token>& t, std::size_t line) {
        if (t[0].text != "sub") return;
        if (t.size() < 3 || t[2].text != ":") throw InputError("expected 'sub <name> : <id> ...'", line, t[0].column);
        if (!names.insert(t[1].text).second) throw InputError("duplicate subset '" + t[1].text + "'", line, t[1].column);
        NamedSubset s{t[1].text, {}, line};
        std::unordered_set<VertexId> seen;
        for (std::size_t i = 3; i < t.size(); ++i) {
            const auto v = g.find(t[i].text);
            if (!v) throw InputError("undeclared vertex '" + t[i].text + "'", line, t[i].column);
            if (seen.insert(*v).second) s.vertices.push_back(*v);
        }
        if (s.vertices.empty()) throw InputError("subset '" + s.name + "' is empty", line, t[1].column);
        out.push_back(std::move(s));
    });
    return out;
}

std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

}  // namespace cubical::io
