#pragma once

#include "genset/family.hpp"
#include "genset/graph.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace genset::io {

/// Family text format:
///   n=<int>
///   1,3,4      one set per line, ascending elements
///   -          the empty set
///   # comment
MadeFamily read_family(std::istream& in);
MadeFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const SetFamily& family);

/// Parses one set line ("1,3,4" or "-") for ground set n.
SubsetMask parse_set(const std::string& text, int n);

/// Edge-list format: `vertices=<m>` then one `u v` pair per line, 0-based.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace genset::io
