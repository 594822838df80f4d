#ifndef CMG_WALK_HPP
#define CMG_WALK_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmg/graph.hpp"

namespace cmg {

/// Alternating node/edge sequence. nodes.size() == edges.size() + 1, and
/// edges[k] joins nodes[k] and nodes[k+1]. Repeats are allowed.
struct Walk {
    std::vector<NodeIndex> nodes;
    std::vector<Edge> edges;

    std::size_t length() const { return edges.size(); }
    NodeIndex front() const { return nodes.front(); }
    NodeIndex back() const { return nodes.back(); }

    /// Appends edge e leaving back(). e must touch back().
    void push(const Edge& e) {
        nodes.push_back(e.other(nodes.back()));
        edges.push_back(e);
    }
    Walk reversed() const;

    friend bool operator==(const Walk&, const Walk&) = default;
};

/// Structural validity: non-empty, every edge present in g, endpoints match.
bool is_valid_walk(const MixedGraph& g, const Walk& w);

enum class SectionKind { Endpoint, Collider, NonCollider };

/// Nodes [first, last] of the walk, joined by lines only.
struct Section {
    std::size_t first = 0;
    std::size_t last = 0;
    SectionKind kind = SectionKind::NonCollider;
};

/// Maximal line runs of w, in order. Inner sections are Collider when both
/// flanking edges carry a head into the section; sections touching either end
/// of the walk are Endpoint.
std::vector<Section> sections(const Walk& w);

/// Nodes of a section, with repeats collapsed.
NodeSet section_nodes(const Walk& w, const Section& s);

/// Direct check of the definition: collider sections meet c, every other
/// section avoids it.
bool is_c_connecting(const Walk& w, NodeSet c);

/// "a -> b -- c <-> d"
std::string render(const MixedGraph& g, const Walk& w);

/// Shortest line-only walk from `from` to `to` avoiding `blocked`.
std::optional<Walk> line_path(const Adjacency& adj, NodeIndex from, NodeIndex to, NodeSet blocked);

}  // namespace cmg

#endif  // CMG_WALK_HPP
