#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubical/graph.hpp"

namespace cubical::io {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

// Whitespace tokens of one line, with '#' comments stripped.
std::vector<Token> tokenize(std::string_view line);

// Calls `fn(tokens, line_number)` for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        ++line_no;
        auto tokens = tokenize(line);
        if (!tokens.empty()) fn(tokens, line_no);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
}

std::string read_file(const std::string& path);

// `vertex <id>` / `edge <id> <id>`, order-insensitive; `sub` lines are
// skipped so one file may carry both a graph and its subsets.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

struct NamedSubset {
    std::string name;
    std::vector<VertexId> vertices;
    std::size_t line = 0;
};

// `sub <name> : <id> <id> ...` lines; other lines are ignored.
std::vector<NamedSubset> parse_subsets(std::string_view text, const Graph& g);

// Stable 64-bit FNV-1a content digest, hex encoded.
std::string digest(std::string_view text);

}  // namespace cubical::io
