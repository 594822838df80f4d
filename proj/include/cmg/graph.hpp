#ifndef CMG_GRAPH_HPP
#define CMG_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmg/node_set.hpp"

namespace cmg {

enum class EdgeType : std::uint8_t { Line, Arrow, Arc };

std::string_view to_string(EdgeType t);

/// A typed edge between two node indices. Arrows point from `from` to `to`;
/// lines and arcs are stored with from < to.
struct Edge {
    NodeIndex from = 0;
    NodeIndex to = 0;
    EdgeType type = EdgeType::Line;

    static Edge line(NodeIndex a, NodeIndex b) { return a < b ? Edge{a, b, EdgeType::Line} : Edge{b, a, EdgeType::Line}; }
    static Edge arc(NodeIndex a, NodeIndex b) { return a < b ? Edge{a, b, EdgeType::Arc} : Edge{b, a, EdgeType::Arc}; }
    static Edge arrow(NodeIndex from, NodeIndex to) { return Edge{from, to, EdgeType::Arrow}; }

    NodeIndex other(NodeIndex x) const { return x == from ? to : from; }
    bool touches(NodeIndex x) const { return x == from || x == to; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) {
        if (auto c = a.type <=> b.type; c != 0) return c;
        if (auto c = a.from <=> b.from; c != 0) return c;
        return a.to <=> b.to;
    }
};

/// True iff `e` has an arrowhead at endpoint `x`.
inline bool has_head_at(const Edge& e, NodeIndex x) {
    switch (e.type) {
        case EdgeType::Line: return false;
        case EdgeType::Arrow: return e.to == x;
        case EdgeType::Arc: return true;
    }
    return false;
}

/// Mutable per-node adjacency masks. This is the working representation the
/// transform algorithms rewrite in place; MixedGraph wraps a finished one.
struct Adjacency {
    std::vector<NodeSet> line;      // neighbours
    std::vector<NodeSet> arc;       // spouses
    std::vector<NodeSet> children;  // i -> children[i]
    std::vector<NodeSet> parents;   // parents[i] -> i

    Adjacency() = default;
    explicit Adjacency(std::size_t n) : line(n), arc(n), children(n), parents(n) {}

    std::size_t size() const { return line.size(); }

    bool has(const Edge& e) const;
    /// Inserts `e`; returns false when an edge of the same type already joins
    /// the pair.
    bool add(const Edge& e);
    /// Adds the edge whose arrowheads at i and j are exactly the given ones:
    /// none -> line, head at i only -> j->i, head at j only -> i->j, both -> arc.
    bool add_with_heads(NodeIndex i, NodeIndex j, bool head_i, bool head_j);

    /// Every node joined to i by an edge of any type.
    NodeSet adjacent(NodeIndex i) const { return line[i] | arc[i] | children[i] | parents[i]; }
    /// All edges at i, each reported once per type.
    std::vector<Edge> edges_at(NodeIndex i) const;
    /// All edges between i and j.
    std::vector<Edge> edges_between(NodeIndex i, NodeIndex j) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

struct LabeledEdge {
    std::string from;
    std::string to;
    EdgeType type = EdgeType::Line;
};

/// Loopless mixed graph over labelled nodes.
///
/// Nodes are kept sorted by label, so node indices, edge lists, and anything
/// rendered from a graph are deterministic. Lines and arcs are unordered;
/// arrows are ordered. Multiple edges between one pair are allowed only if
/// their types differ. Instances are immutable; transforms return new graphs.
class MixedGraph {
public:
    MixedGraph() = default;

    /// Builds a graph from labels and typed edges. Duplicate edges collapse.
    /// Throws Error{LoopEdge} for i-i edges, Error{UnknownNode} for edge
    /// endpoints missing from `nodes`, Error{TooLarge} beyond 64 nodes.
    static MixedGraph build(std::vector<std::string> nodes, const std::vector<LabeledEdge>& edges);

    /// Wraps an adjacency whose node i carries labels[i]. Labels must be
    /// sorted and unique.
    static MixedGraph from_adjacency(std::vector<std::string> labels, Adjacency adj);

    std::size_t size() const { return labels_.size(); }
    NodeSet all() const { return NodeSet::first(size()); }

    const std::string& label(NodeIndex i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeIndex> find(std::string_view label) const;
    /// Throws Error{UnknownNode}.
    NodeIndex index(std::string_view label) const;
    /// Label set to node set. Throws Error{UnknownNode}.
    NodeSet nodes(const std::vector<std::string>& labels) const;
    NodeSet nodes(std::initializer_list<std::string_view> labels) const;
    std::vector<std::string> labels_of(NodeSet s) const;

    const Adjacency& adjacency() const { return adj_; }
    NodeSet ne(NodeIndex i) const { return adj_.line[i]; }
    NodeSet sp(NodeIndex i) const { return adj_.arc[i]; }
    NodeSet pa(NodeIndex i) const { return adj_.parents[i]; }
    NodeSet ch(NodeIndex i) const { return adj_.children[i]; }
    NodeSet adjacent(NodeIndex i) const { return adj_.adjacent(i); }
    bool adjacent(NodeIndex i, NodeIndex j) const { return adj_.adjacent(i).contains(j); }
    bool has(const Edge& e) const { return adj_.has(e); }
    bool has_line(NodeIndex i, NodeIndex j) const { return adj_.line[i].contains(j); }
    bool has_arc(NodeIndex i, NodeIndex j) const { return adj_.arc[i].contains(j); }
    bool has_arrow(NodeIndex from, NodeIndex to) const { return adj_.children[from].contains(to); }

    /// Sorted by (type, from, to).
    std::vector<Edge> edges() const { return adj_.edges(); }
    std::size_t edge_count() const;
    /// No two edges share the same endpoint pair.
    bool is_simple() const;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    std::vector<std::string> labels_;
    Adjacency adj_;
};

/// Convenience wrapper for MixedGraph::build.
MixedGraph build_graph(std::vector<std::string> nodes, const std::vector<LabeledEdge>& edges);

// ---------------------------------------------------------------------------
// Graph classes

enum class GraphClass : std::uint8_t {
    None = 0,
    UG = 1u << 0,
    DAG = 1u << 1,
    CG = 1u << 2,
    CMG = 1u << 3,
    AnG = 1u << 4,
};

constexpr GraphClass operator|(GraphClass a, GraphClass b) {
    return static_cast<GraphClass>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr GraphClass operator&(GraphClass a, GraphClass b) {
    return static_cast<GraphClass>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
constexpr GraphClass& operator|=(GraphClass& a, GraphClass b) { return a = a | b; }
/// True iff every flag in `want` is set in `flags`.
constexpr bool contains(GraphClass flags, GraphClass want) { return (flags & want) == want; }

/// Space separated flag names in the order UG DAG CG CMG AnG.
std::string to_string(GraphClass flags);

/// A cycle of lines and forward arrows containing at least one arrow.
bool has_semidirected_cycle_with_arrow(const MixedGraph& g);

GraphClass classify(const MixedGraph& g);

bool is_cmg(const MixedGraph& g);
bool is_chain_graph(const MixedGraph& g);
bool is_anterial(const MixedGraph& g);

/// Throw Error{NotACMG} / {NotAChainGraph} / {NotAnAnG} unless g qualifies.
void require_cmg(const MixedGraph& g);
void require_chain_graph(const MixedGraph& g);
void require_anterial(const MixedGraph& g);

// ---------------------------------------------------------------------------
// Structural queries

/// Nodes with a semi-directed walk into some member of `a`, minus `a`.
NodeSet anteriors(const MixedGraph& g, NodeSet a);
/// ant(i) for every node i, indexed by node.
std::vector<NodeSet> anterior_table(const Adjacency& adj);
/// Nodes with a directed walk to i, excluding i.
NodeSet ancestors(const MixedGraph& g, NodeIndex i);

/// Connected components of the line-only subgraph of a chain graph, ordered
/// by smallest member. Throws Error{NotAChainGraph}.
std::vector<NodeSet> chain_components(const MixedGraph& g);

/// Nodes reachable from v along lines without visiting `blocked` (v included).
/// Throws Error{BlockedStart} if v is blocked.
NodeSet line_reachable(const MixedGraph& g, NodeIndex v, NodeSet blocked = {});
/// Unchecked variant over raw neighbour masks.
NodeSet line_reach(const std::vector<NodeSet>& lines, NodeIndex v, NodeSet blocked);

MixedGraph induced_subgraph(const MixedGraph& g, NodeSet a);

/// All-line graph with a line for each edge of g and between every two
/// parents of a common chain component. Throws Error{NotAChainGraph}.
MixedGraph moral_graph(const MixedGraph& g);

/// Maps a node set of `from` onto `to` by label; labels absent in `to` drop.
NodeSet translate(const MixedGraph& from, NodeSet s, const MixedGraph& to);

}  // namespace cmg

#endif  // CMG_GRAPH_HPP
