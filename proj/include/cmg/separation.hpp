#ifndef CMG_SEPARATION_HPP
#define CMG_SEPARATION_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/walk.hpp"

namespace cmg {

struct SeparationQuery {
    NodeSet a;
    NodeSet b;
    NodeSet c;
};

/// Throws Error{MalformedQuery} if the sets overlap or leave the graph.
void validate(const MixedGraph& g, const SeparationQuery& q);

/// Every node joined to some member of `a` by a c-connecting walk given `c`.
/// Members of `a` outside `c` are included through the one-node walk.
/// Assumes a CMG; does not validate.
NodeSet connected_endpoints(const MixedGraph& g, NodeSet a, NodeSet c);

/// No c-connecting walk between q.a and q.b given q.c. Empty a or b counts
/// as separated. Throws Error{NotACMG}, Error{MalformedQuery}.
bool c_separated(const MixedGraph& g, const SeparationQuery& q);

/// A connecting walk from q.a to q.b, or nullopt when separated.
std::optional<Walk> c_connecting_witness(const MixedGraph& g, const SeparationQuery& q);

/// Moralization criterion on a chain graph. Throws Error{NotAChainGraph}.
bool moral_separated(const MixedGraph& g, const SeparationQuery& q);

enum class OracleMode {
    WalksInC,     // collider sections meet C, other sections avoid it
    PathsInAntC,  // sections are paths; collider sections inside C ∪ ant(C)
};

/// Smallest maxlen the oracle accepts for a graph on n nodes.
inline std::size_t oracle_bound(std::size_t n) { return 2 * n * n; }

/// Brute-force check over every walk of at most maxlen edges (0 picks 4|V|²).
/// Throws Error{BoundTooSmall} below oracle_bound.
bool bounded_walk_oracle(const MixedGraph& g, const SeparationQuery& q, OracleMode mode,
                         std::size_t maxlen = 0);

// ---------------------------------------------------------------------------
// Independence models

/// ⟨i, j | c⟩ over indices into the model's ground labels, i < j.
struct Statement {
    NodeIndex i = 0;
    NodeIndex j = 0;
    NodeSet c;

    friend auto operator<=>(const Statement& x, const Statement& y) {
        return std::tie(x.i, x.j, x.c) <=> std::tie(y.i, y.j, y.c);
    }
    friend bool operator==(const Statement&, const Statement&) = default;
};

struct IndependenceModel {
    std::vector<std::string> ground;  // sorted labels
    std::set<Statement> statements;

    bool contains(NodeIndex i, NodeIndex j, NodeSet c) const {
        return statements.count(i < j ? Statement{i, j, c} : Statement{j, i, c}) > 0;
    }
    /// "a ⊥ b | {c,d}" lines in canonical order.
    std::vector<std::string> lines() const;
};

inline constexpr std::size_t default_model_cap = 8;

/// Every pairwise statement of g. Throws Error{TooLarge} above `cap` nodes.
IndependenceModel pairwise_model(const MixedGraph& g, std::size_t cap = default_model_cap);

/// Throws Error{GroundSetMismatch} unless both share a ground set.
bool models_equal(const IndependenceModel& m1, const IndependenceModel& m2);

/// The model after marginalizing over m and conditioning on c (node sets of
/// the model's ground): ⟨i,j|D⟩ with i,j,D outside m ∪ c and ⟨i,j|D ∪ c⟩ in
/// the input. Indices are remapped onto the surviving ground.
IndependenceModel restrict_model(const IndependenceModel& model, NodeSet m, NodeSet c);

/// Statements of `left` missing from `right`, and vice versa.
std::vector<std::string> model_difference(const IndependenceModel& left, const IndependenceModel& right,
                                          std::size_t limit = 5);

/// Every non-adjacent pair has some separating set.
bool is_maximal(const MixedGraph& g, std::size_t cap = default_model_cap);

/// A collider trislide i *-> u -- ... -- w <-* j with i, j non-adjacent and an
/// arrow from a section node k to j (or to i). Its existence rules out
/// maximality; its absence says nothing.
struct VvnWitness {
    NodeIndex i = 0;
    NodeIndex j = 0;
    NodeIndex k = 0;        // section node with the arrow
    NodeIndex target = 0;   // i or j
    Walk trislide;
};

std::optional<VvnWitness> non_maximality_witness_vvn(const MixedGraph& g);

}  // namespace cmg

#endif  // CMG_SEPARATION_HPP
