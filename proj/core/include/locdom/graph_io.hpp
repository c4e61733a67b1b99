#ifndef LOCDOM_GRAPH_IO_HPP
#define LOCDOM_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// graph6 interchange format, bit-exact per the published byte layout.
// Orders below 63 must use the short header; the long headers are accepted
// up to an implementation limit on the order.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain text alternative: an order header line, one "u v" pair per line,
// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// One graph6 record per non-blank line.
std::vector<Graph> parse_graph6_stream(std::istream& in);

// Sniffs edge-list vs graph6 from the first significant line.
Graph read_graph_auto(std::istream& in);

}  // namespace locdom

#endif
