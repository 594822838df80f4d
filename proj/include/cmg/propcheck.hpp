#ifndef CMG_PROPCHECK_HPP
#define CMG_PROPCHECK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmg/graph.hpp"
#include "cmg/separation.hpp"
#include "cmg/transform.hpp"

namespace cmg {

enum class GraphKind { CG, CMG, AnG };

struct GeneratorConfig {
    std::size_t node_count = 5;  // 2..8
    double edge_density = 0.4;   // [0, 1]
    std::uint64_t seed = 0;
    GraphKind kind = GraphKind::CMG;
};

/// Deterministic for a given config on every platform: only raw
/// mt19937_64 output is consumed. Nodes are labelled a, b, c, ...
/// Throws Error{InvalidConfig}.
MixedGraph random_graph(const GeneratorConfig& cfg);

/// Calls f on every labelled graph over `labels` of the given kind (CG or
/// CMG; CMGs include multi-edges). Returns the number of graphs visited.
std::size_t for_each_graph(const std::vector<std::string>& labels, GraphKind kind,
                           const std::function<void(const MixedGraph&)>& f);

struct PropertyReport {
    std::string property_id;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::optional<std::string> counterexample;

    /// property=<id> instances=N failures=N skipped=N [counterexample="..."]
    std::string to_line() const;
};

/// One generated test case. Sets are node sets of `g`.
struct Instance {
    MixedGraph g;
    NodeSet m;
    NodeSet c;
    NodeSet m1;
    NodeSet c1;
};

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict = Verdict::Pass;
    std::string detail;

    static Outcome pass() { return {}; }
    static Outcome skip() { return {Verdict::Skip, {}}; }
    static Outcome fail(std::string why) { return {Verdict::Fail, std::move(why)}; }
};

using Check = std::function<Outcome(const Instance&)>;

/// "nodes: a b; a -> b | M={..} C={..} M1={..} C1={..}"
std::string describe(const Instance& inst);

/// Deletes nodes while `check` keeps failing; returns the smallest failing
/// instance found.
Instance shrink(const Instance& inst, const Check& check);

// Per-instance checks. Each returns Fail with a short description of the first
// discrepancy it sees.
Outcome check_marginalization(const Instance& inst);  // model preserved, M
Outcome check_conditioning(const Instance& inst);     // model preserved, C
Outcome check_combined(const Instance& inst);         // model preserved, M and C
Outcome check_ang(const Instance& inst);              // model preserved, AnG pipeline
Outcome check_composition_marginalization(const Instance& inst);
Outcome check_composition_conditioning(const Instance& inst);
Outcome check_composition_combined(const Instance& inst);  // skips non-maximal
Outcome check_commutativity_graph(const Instance& inst);   // skips non-maximal
Outcome check_commutativity_model(const Instance& inst);

/// Suite ids in run order.
const std::vector<std::string>& suite_ids();

/// Runs `count` seeded instances of one suite. Throws Error{InvalidConfig} for
/// unknown ids.
PropertyReport run_suite(const std::string& id, std::uint64_t seed, std::size_t count);

/// Seed for instance `index` of a run.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

struct DemoResult {
    PropertyReport report;
    MixedGraph dag;
    NodeSet marginalized;
    std::size_t chain_graphs = 0;  // CGs compared against
    bool default_candidate = true;
};

/// Looks for a DAG whose marginal model no chain graph on the remaining
/// nodes induces. failures counts matching chain graphs (0 means shown).
DemoResult cg_unrepresentability_demo();

}  // namespace cmg

#endif  // CMG_PROPCHECK_HPP
