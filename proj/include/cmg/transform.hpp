#ifndef CMG_TRANSFORM_HPP
#define CMG_TRANSFORM_HPP

#include <set>
#include <utility>

#include "cmg/graph.hpp"

namespace cmg {

/// Marginalize over m, condition on c. Both are node sets of the input graph.
struct TransformSpec {
    NodeSet m;
    NodeSet c;
};

/// Throws Error{MalformedQuery} on overlap or nodes outside g.
void validate(const MixedGraph& g, const TransformSpec& spec);

enum class Order { MarginalizeFirst, ConditionFirst };

/// Latent projection over m. Throws Error{NotACMG}, Error{UnknownNode}.
MixedGraph marginalize(const MixedGraph& g, NodeSet m);

/// Conditioning on c. Throws Error{NotACMG}, Error{UnknownNode}.
MixedGraph condition(const MixedGraph& g, NodeSet c);

MixedGraph marginalize_and_condition(const MixedGraph& g, const TransformSpec& spec,
                                     Order order = Order::MarginalizeFirst);

/// Turns a CMG into an anterial graph on the same nodes.
MixedGraph anterialize(const MixedGraph& h);

/// anterialize(marginalize(condition(g, c), m)).
MixedGraph ang_transform(const MixedGraph& g, const TransformSpec& spec);

/// Trislide conditions on k <-> i -- ... -- j <-* l. Throw Error{NotACMG} /
/// Error{NotAnAnG} on inputs outside the class.
bool in_class_H(const MixedGraph& g);
bool in_class_K(const MixedGraph& g);

// ---------------------------------------------------------------------------
// Edge characterizations, searched directly on the input graph.
//
// Each *_kinds function returns the arrowhead patterns (head at i, head at j)
// of the edges it predicts between i and j; the bool versions only report
// whether the set is non-empty.

using HeadPattern = std::pair<bool, bool>;
using HeadPatterns = std::set<HeadPattern>;

/// (head at i, head at j) of every edge between i and j in g.
HeadPatterns edge_patterns(const MixedGraph& g, NodeIndex i, NodeIndex j);

/// Walks in the graph after the first marginalization step whose inner nodes
/// all lie in m and whose inner sections are non-collider.
HeadPatterns marginal_edge_kinds(const MixedGraph& g, NodeSet m, NodeIndex i, NodeIndex j);
bool marginal_edge_oracle(const MixedGraph& g, NodeSet m, NodeIndex i, NodeIndex j);

/// Walks whose inner sections are collider and inside C ∪ ant(C), with
/// single-node endpoint sections unless the endpoint is a spouse of that set
/// and receives an arrowhead.
HeadPatterns conditional_edge_kinds(const MixedGraph& g, NodeSet c, NodeIndex i, NodeIndex j);
bool conditional_edge_oracle(const MixedGraph& g, NodeSet c, NodeIndex i, NodeIndex j);

/// Walks from j to i whose inner sections are collider and inside
/// ant(i) ∪ {i}, with single-node endpoint sections.
HeadPatterns subprimitive_walk_kinds(const MixedGraph& h, NodeIndex j, NodeIndex i);
bool subprimitive_walk_exists(const MixedGraph& h, NodeIndex j, NodeIndex i);

namespace detail {
/// The first marginalization step alone (no deletion).
Adjacency marginalize_step1(const Adjacency& adj, NodeSet m);
}  // namespace detail

}  // namespace cmg

#endif  // CMG_TRANSFORM_HPP
