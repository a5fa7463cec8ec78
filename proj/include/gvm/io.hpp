#pragma once

// Graph file I/O and the textual graph grammars used by the CLI.
//
// Edge-list format: first line `n <vertex count>`, then one `u v` pair per
// line (0-based), `#` starts a comment line.
//
// Constructor DSL atoms: cycle:6  path:4  complete:5  kpartite:1,2,2  empty:3
// Expressions over atoms or file paths:
//   tensor(<g>,<g>)  lex(<g>,<g>)  hjoin(<g>;<g>,...)  corona(<g>;<g>,...)
//   embed(<g>)  inflate(<g>;r1,r2,...)

#include <iosfwd>
#include <string>

#include "gvm/graph.hpp"

namespace gvm {

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);
std::string to_edge_list_string(const Graph& g);

// A DSL atom, a product expression, or (failing both) a file path.
Graph parse_graph_source(const std::string& text);

}  // namespace gvm
