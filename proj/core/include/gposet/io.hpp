// Serialization: graph6, a line-based multigraph format, DOT, and the
// graph-spec mini-language used by the command-line tool.
//
// graph6 covers simple graphs only and follows the standard encoding:
// N(n) is n+63 for n <= 62, otherwise '~' followed by three bytes holding
// n in big-endian 6-bit groups (+63 each); the upper triangle is read
// column by column (bit (i,j) for j = 1..n-1, i < j), packed into 6-bit
// groups padded with zeros, each emitted as group+63.
//
// The multigraph format is lossless: first line "n=<order>", then one
// "i j m" line per edge with multiplicity m, loops as i=j. Lines may be
// separated by '\n' or ';'.

#pragma once

#include <string>

#include "gposet/graph.hpp"

namespace gposet {

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

std::string to_multigraph_text(const Graph& g);
Graph from_multigraph_text(const std::string& text);

std::string to_dot(const Graph& g, const std::string& name = "G");

// Graph-spec mini-language, one spec per string:
//   null              the order-0 graph
//   K<n>              complete graph, e.g. K1, K5
//   nK1:<n>           n isolated vertices
//   path:<a>          the path P_a
//   paths:<a,b,...>   disjoint union of paths
//   cycle:<n>         the cycle C_n
//   complete:<n>      same as K<n>
//   empty:<n>         same as nK1:<n>
//   multipartite:<a,b,...>  complete multipartite with the given parts
//   house             the 5-vertex house graph
//   houses:<n>        n disjoint houses
//   Dv:<spec>         the D_v construction applied to a nested spec (apex v=0)
//   g6:<text>         explicit graph6
//   n=<order>;i j m;...     multigraph format
// Anything else is tried as raw graph6.
Graph parse_graph_spec(const std::string& spec);

}  // namespace gposet
