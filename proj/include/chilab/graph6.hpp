#pragma once

#include <string>
#include <vector>

#include "chilab/graph.hpp"

namespace chilab {

// Canonical graph6 encoding (no header, no trailing newline).
std::string encode_graph6(const Graph& g);

// Decodes one graph6 line. Accepts an optional ">>graph6<<" header prefix.
// Malformed input raises a parse error naming the byte offset.
Graph decode_graph6(const std::string& line);

// One graph per line; blank lines are skipped.
std::vector<Graph> decode_graph6_lines(const std::string& text);
std::vector<Graph> read_graph6_file(const std::string& path);

// Fixture format: one "u v" pair per line, 0-based. '#' starts a comment.
// A line holding a single integer declares the vertex count (for isolated
// vertices); otherwise the count is the largest endpoint plus one.
Graph parse_edge_list_text(const std::string& text);

}  // namespace chilab
