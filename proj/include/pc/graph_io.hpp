#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pc/graph.hpp"

namespace pc {

// graph6, short form only (n <= 62): one byte n+63, then the upper triangle
// read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits
// per byte, most significant first, each byte offset by 63.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// One graph per line; blank lines and lines starting with '>' or '#' are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

// Edge-list text: a header "n <count>" then one "u v" pair per line.
// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace pc
