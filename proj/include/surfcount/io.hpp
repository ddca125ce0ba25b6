#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surfcount/branch_decomposition.hpp"
#include "surfcount/embedded_map.hpp"
#include "surfcount/graph.hpp"

namespace surfcount {

// Text formats. Blank lines are ignored and '#' starts a comment. Parse
// errors throw InputError with the offending line number.
//
//   map <n> <m>                 graph <n> <m>          color <v> <c>
//   edge <id> <u> <v>           edge <u> <v>
//   rot <u> <e>.<slot> ...
//
//   bd <nodes>
//   tnode <id> leaf <edge> | tnode <id> internal | tnode <id> root
//   tedge <a> <b>
//   mid <a> <b> <v> ...         (optional annotation, ignored on input)

Map parse_map(std::istream& in);
void write_map(std::ostream& out, const Map& map);

SimpleGraph parse_pattern(std::istream& in);
void write_pattern(std::ostream& out, const SimpleGraph& g);

/// Colours 1..q for each of the n vertices; every vertex must be coloured.
std::vector<int> parse_colors(std::istream& in, int vertex_count);

BranchDecomposition parse_bd(std::istream& in);
void write_bd(std::ostream& out, const BranchDecomposition& bd, const MiddleSetAnnotation* mids = nullptr);

Map read_map_file(const std::string& path);
SimpleGraph read_pattern_file(const std::string& path);

}  // namespace surfcount
