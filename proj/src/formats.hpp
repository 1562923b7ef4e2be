#pragma once

#include <string>

#include "graph.hpp"

namespace gdr {

enum class file_format { autodetect, dimacs, edgelist };

// Returns dimacs when the text contains a DIMACS problem line, else edgelist.
file_format detect_format(const std::string& text);

// Parses a graph from text. Throws parse_error with a 1-based line number
// on malformed input.
//
// DIMACS dialect: 'c' comment lines, one 'p edge <n> <m>' problem line,
// 'e <u> <v>' edge lines with 1-based endpoints, and optional 'n <id>'
// vertex lines. Without 'n' lines the vertex set is {1, ..., n}; with them
// it is exactly the declared ids (any non-negative integers, n of them).
// Self-loops, repeated edges, and count mismatches are rejected.
//
// Edge list dialect: '#' starts a comment, blank lines are skipped, a line
// with two integers is an edge, a line with one integer names a vertex
// (used for isolated vertices). Ids are non-negative and need not be
// contiguous. Self-loops and repeated edges are rejected.
graph parse_graph(const std::string& text, file_format fmt = file_format::autodetect);

// Serializes a graph; round-trips through parse_graph. fmt must not be
// autodetect. DIMACS output declares 'n' lines unless the vertex set is
// exactly {1, ..., n}.
std::string write_graph(const graph& g, file_format fmt);

// Reads and parses a whole file. Throws parse_error when unreadable.
graph load_graph(const std::string& path, file_format fmt = file_format::autodetect);

// "dimacs", "edgelist" or "auto".
std::string format_name(file_format fmt);

// Inverse of format_name; throws parse_error on unknown names.
file_format format_from_name(const std::string& name);

} // namespace gdr
