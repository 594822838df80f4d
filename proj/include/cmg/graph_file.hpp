#ifndef CMG_GRAPH_FILE_HPP
#define CMG_GRAPH_FILE_HPP

#include <string>
#include <string_view>

#include "cmg/graph.hpp"

namespace cmg {

/// Plain-text graph format:
///
///     # comment
///     nodes: a b c
///     a -- b
///     b -> c
///     c <-> a
///
/// "a <- b" is accepted as b -> a. Nodes named by edges need not be declared.
/// Errors carry the offending line number; loops are Errc::LoopEdge, anything
/// else malformed is Errc::Parse.
MixedGraph parse_graph(std::string_view text);

/// Canonical form: one "nodes:" line listing every node in label order, then
/// lines, arrows, and arcs, each group sorted by endpoint labels.
std::string render_graph(const MixedGraph& g);

/// Graphviz digraph; lines carry dir=none and arcs dir=both.
std::string to_dot(const MixedGraph& g);

/// Comma or space separated labels; an empty string gives an empty list.
std::vector<std::string> split_labels(std::string_view text);

}  // namespace cmg

#endif  // CMG_GRAPH_FILE_HPP
