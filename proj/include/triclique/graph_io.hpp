#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "triclique/graph.hpp"

namespace triclique {

enum class GraphFormat { EdgeList, Dimacs };

/// "n m" header followed by m "u v" lines. Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// DIMACS ascii: 'c' comments, one "p edge n m" line, then "e u v" lines.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

/// Picks the format from the first meaningful line ("p ..." or "c ..." means DIMACS).
Graph read_graph(std::istream& in);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format = GraphFormat::EdgeList);

Graph parse_graph(const std::string& text);

} // namespace triclique
