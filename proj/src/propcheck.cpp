#include "cmg/propcheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmg/error.hpp"
#include "cmg/graph_file.hpp"

namespace cmg {

namespace {

// Raw engine output only; the standard distributions are not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return uniform() < p; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> letter_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(std::string(1, static_cast<char>('a' + k)));
    return out;
}

std::string set_string(const MixedGraph& g, NodeSet s) {
    std::string out = "{";
    bool first = true;
    for (NodeIndex v : s) {
        if (!first) out += ',';
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

MixedGraph random_graph(const GeneratorConfig& cfg) {
    if (cfg.node_count < 2 || cfg.node_count > 8)
        throw Error(Errc::InvalidConfig, "node_count must lie in 2..8");
    if (!(cfg.edge_density >= 0.0 && cfg.edge_density <= 1.0))
        throw Error(Errc::InvalidConfig, "edge_density must lie in [0, 1]");

    Rng rng(cfg.seed);
    const std::size_t n = cfg.node_count;
    std::vector<NodeIndex> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    for (std::size_t k = n - 1; k > 0; --k) std::swap(order[k], order[rng.below(k + 1)]);
    std::vector<std::size_t> component(n, 0);
    std::size_t current = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && rng.chance(0.5)) ++current;
        component[order[k]] = current;
    }

    Adjacency adj(n);
    for (NodeIndex u = 0; u < n; ++u) {
        for (NodeIndex v = u + 1; v < n; ++v) {
            if (!rng.chance(cfg.edge_density)) continue;
            if (component[u] == component[v]) adj.add(Edge::line(u, v));
            else if (component[u] > component[v]) adj.add(Edge::arrow(u, v));
            else adj.add(Edge::arrow(v, u));
        }
    }
    if (cfg.kind != GraphKind::CG) {
        // Arcs never lie on semi-directed walks, so no sample is rejected here.
        for (NodeIndex u = 0; u < n; ++u)
            for (NodeIndex v = u + 1; v < n; ++v)
                if (rng.chance(cfg.edge_density * 0.5)) adj.add(Edge::arc(u, v));
    }
    MixedGraph g = MixedGraph::from_adjacency(letter_labels(n), std::move(adj));
    if (cfg.kind == GraphKind::AnG) return anterialize(g);
    return g;
}

std::size_t for_each_graph(const std::vector<std::string>& labels, GraphKind kind,
                           const std::function<void(const MixedGraph&)>& f) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
    for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v = u + 1; v < n; ++v) pairs.push_back({u, v});

    // CG: one of none / line / u->v / v->u per pair. CMG: any subset of the
    // four edge kinds per pair.
    const std::size_t base = kind == GraphKind::CG ? 4 : 16;
    std::vector<std::size_t> digit(pairs.size(), 0);
    std::size_t visited = 0;
    while (true) {
        Adjacency adj(n);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [u, v] = pairs[p];
            const std::size_t d = digit[p];
            if (kind == GraphKind::CG) {
                if (d == 1) adj.add(Edge::line(u, v));
                if (d == 2) adj.add(Edge::arrow(u, v));
                if (d == 3) adj.add(Edge::arrow(v, u));
            } else {
                if (d & 1) adj.add(Edge::line(u, v));
                if (d & 2) adj.add(Edge::arrow(u, v));
                if (d & 4) adj.add(Edge::arrow(v, u));
                if (d & 8) adj.add(Edge::arc(u, v));
            }
        }
        const MixedGraph g = MixedGraph::from_adjacency(sorted, std::move(adj));
        const bool keep = kind == GraphKind::CG    ? is_chain_graph(g)
                          : kind == GraphKind::CMG ? is_cmg(g)
                                                   : is_anterial(g);
        if (keep) {
            f(g);
            ++visited;
        }
        std::size_t p = 0;
        while (p < digit.size() && ++digit[p] == base) digit[p++] = 0;
        if (p == digit.size()) break;
    }
    return visited;
}

std::string PropertyReport::to_line() const {
    std::string out = "property=" + property_id + " instances=" + std::to_string(instances) +
                      " failures=" + std::to_string(failures) + " skipped=" + std::to_string(skipped);
    if (counterexample) {
        out += " counterexample=\"";
        for (char ch : *counterexample) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        out += '"';
    }
    return out;
}

std::string describe(const Instance& inst) {
    std::string graph = render_graph(inst.g);
    graph.pop_back();
    std::replace(graph.begin(), graph.end(), '\n', ';');
    std::string out = graph + " | M=" + set_string(inst.g, inst.m) + " C=" + set_string(inst.g, inst.c);
    if (!inst.m1.empty() || !inst.c1.empty())
        out += " M1=" + set_string(inst.g, inst.m1) + " C1=" + set_string(inst.g, inst.c1);
    return out;
}

namespace {

Outcome run_check(const Check& check, const Instance& inst) {
    try {
        return check(inst);
    } catch (const std::exception& e) {
        return Outcome::fail(std::string("exception: ") + e.what());
    }
}

}  // namespace

Instance shrink(const Instance& inst, const Check& check) {
    Instance best = inst;
    bool improved = true;
    while (improved && best.g.size() > 1) {
        improved = false;
        for (NodeIndex v = 0; v < best.g.size(); ++v) {
            const MixedGraph sub = induced_subgraph(best.g, best.g.all() - NodeSet::single(v));
            Instance cand{sub, translate(best.g, best.m, sub), translate(best.g, best.c, sub),
                          translate(best.g, best.m1, sub), translate(best.g, best.c1, sub)};
            if (run_check(check, cand).verdict == Verdict::Fail) {
                best = std::move(cand);
                improved = true;
                break;
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

Outcome compare_models(const IndependenceModel& got, const IndependenceModel& want, const std::string& what) {
    if (got.ground != want.ground) return Outcome::fail(what + ": node sets differ");
    if (got.statements == want.statements) return Outcome::pass();
    std::string detail = what + ":";
    for (const auto& d : model_difference(want, got, 3)) detail += " " + d;
    return Outcome::fail(detail);
}

Outcome compare_graphs(const MixedGraph& got, const MixedGraph& want, const std::string& what) {
    if (got == want) return Outcome::pass();
    auto flat = [](const MixedGraph& g) {
        std::string s = render_graph(g);
        s.pop_back();
        std::replace(s.begin(), s.end(), '\n', ';');
        return s;
    };
    return Outcome::fail(what + ": got [" + flat(got) + "] want [" + flat(want) + "]");
}

IndependenceModel expected_model(const Instance& inst, NodeSet m, NodeSet c) {
    return restrict_model(pairwise_model(inst.g), m, c);
}

MixedGraph combined(const MixedGraph& g, NodeSet m, NodeSet c, Order order = Order::MarginalizeFirst) {
    return marginalize_and_condition(g, TransformSpec{m, c}, order);
}

}  // namespace

Outcome check_marginalization(const Instance& inst) {
    return compare_models(pairwise_model(marginalize(inst.g, inst.m)), expected_model(inst, inst.m, {}),
                          "marginal model");
}

Outcome check_conditioning(const Instance& inst) {
    return compare_models(pairwise_model(condition(inst.g, inst.c)), expected_model(inst, {}, inst.c),
                          "conditional model");
}

Outcome check_combined(const Instance& inst) {
    return compare_models(pairwise_model(combined(inst.g, inst.m, inst.c)), expected_model(inst, inst.m, inst.c),
                          "marginal and conditional model");
}

Outcome check_ang(const Instance& inst) {
    return compare_models(pairwise_model(ang_transform(inst.g, {inst.m, inst.c})),
                          expected_model(inst, inst.m, inst.c), "anterial model");
}

Outcome check_composition_marginalization(const Instance& inst) {
    const MixedGraph once = marginalize(inst.g, inst.m);
    const MixedGraph twice = marginalize(once, translate(inst.g, inst.m1, once));
    return compare_graphs(twice, marginalize(inst.g, inst.m | inst.m1), "stepwise marginalization");
}

Outcome check_composition_conditioning(const Instance& inst) {
    const MixedGraph once = condition(inst.g, inst.c);
    const MixedGraph twice = condition(once, translate(inst.g, inst.c1, once));
    return compare_graphs(twice, condition(inst.g, inst.c | inst.c1), "stepwise conditioning");
}

Outcome check_composition_combined(const Instance& inst) {
    const MixedGraph once = combined(inst.g, inst.m, inst.c);
    const MixedGraph all = combined(inst.g, inst.m | inst.m1, inst.c | inst.c1);
    if (!is_maximal(once) || !is_maximal(all)) return Outcome::skip();
    const MixedGraph twice = combined(once, translate(inst.g, inst.m1, once), translate(inst.g, inst.c1, once));
    return compare_graphs(twice, all, "stepwise marginalization and conditioning");
}

Outcome check_commutativity_graph(const Instance& inst) {
    const MixedGraph mc = combined(inst.g, inst.m, inst.c, Order::MarginalizeFirst);
    if (!is_maximal(mc)) return Outcome::skip();
    return compare_graphs(combined(inst.g, inst.m, inst.c, Order::ConditionFirst), mc, "condition-first graph");
}

Outcome check_commutativity_model(const Instance& inst) {
    return compare_models(pairwise_model(combined(inst.g, inst.m, inst.c, Order::ConditionFirst)),
                          pairwise_model(combined(inst.g, inst.m, inst.c, Order::MarginalizeFirst)),
                          "condition-first model");
}

namespace {

// Every assignment of nodes to A, B, C, or nothing with A and B non-empty.
template <class F>
void for_each_query(std::size_t n, F&& f) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        SeparationQuery q;
        std::size_t rest = code;
        for (NodeIndex v = 0; v < n; ++v, rest /= 4) {
            if (rest % 4 == 1) q.a.insert(v);
            if (rest % 4 == 2) q.b.insert(v);
            if (rest % 4 == 3) q.c.insert(v);
        }
        if (q.a.empty() || q.b.empty()) continue;
        f(q);
    }
}

std::string query_string(const MixedGraph& g, const SeparationQuery& q) {
    return set_string(g, q.a) + " vs " + set_string(g, q.b) + " given " + set_string(g, q.c);
}

Outcome check_separation_oracle(const Instance& inst) {
    Outcome out;
    for_each_query(inst.g.size(), [&](const SeparationQuery& q) {
        if (out.verdict == Verdict::Fail) return;
        const bool fast = c_separated(inst.g, q);
        const bool walks = bounded_walk_oracle(inst.g, q, OracleMode::WalksInC);
        const bool paths = bounded_walk_oracle(inst.g, q, OracleMode::PathsInAntC);
        if (fast != walks || fast != paths)
            out = Outcome::fail(query_string(inst.g, q) + ": search=" + std::to_string(fast) +
                                " walks=" + std::to_string(walks) + " paths=" + std::to_string(paths));
    });
    return out;
}

Outcome check_separation_moral(const Instance& inst) {
    Outcome out;
    for_each_query(inst.g.size(), [&](const SeparationQuery& q) {
        if (out.verdict == Verdict::Fail) return;
        const bool fast = c_separated(inst.g, q);
        const bool moral = moral_separated(inst.g, q);
        if (fast != moral)
            out = Outcome::fail(query_string(inst.g, q) + ": search=" + std::to_string(fast) +
                                " moral=" + std::to_string(moral));
    });
    return out;
}

Outcome expect(bool ok, const std::string& why) { return ok ? Outcome::pass() : Outcome::fail(why); }

Outcome check_closure_marginalize(const Instance& inst) {
    return expect(is_cmg(marginalize(inst.g, inst.m)), "marginal graph is not a CMG");
}

Outcome check_closure_condition(const Instance& inst) {
    return expect(is_cmg(condition(inst.g, inst.c)), "conditional graph is not a CMG");
}

Outcome check_closure_condition_cg(const Instance& inst) {
    return expect(is_chain_graph(condition(inst.g, inst.c)), "conditional graph of a CG is not a CG");
}

Outcome check_closure_anterialize(const Instance& inst) {
    const MixedGraph out = anterialize(inst.g);
    if (!is_anterial(out)) return Outcome::fail("anterialized graph is not an AnG");
    if (!out.is_simple()) return Outcome::fail("anterialized graph is not simple");
    if (anterior_table(out.adjacency()) != anterior_table(inst.g.adjacency()))
        return Outcome::fail("anterialization changed anterior sets");
    return Outcome::pass();
}

Outcome check_anterialize_model(const Instance& inst) {
    return compare_models(pairwise_model(anterialize(inst.g)), pairwise_model(inst.g), "anterialized model");
}

Outcome check_class_h(const Instance& inst) {
    return expect(in_class_H(marginalize(inst.g, inst.m)), "marginalized CG is outside class H");
}

Outcome check_class_h_combined(const Instance& inst) {
    return expect(in_class_H(combined(inst.g, inst.m, inst.c)), "marginalized and conditioned CG is outside class H");
}

Outcome check_class_k(const Instance& inst) {
    return expect(in_class_K(ang_transform(inst.g, {inst.m, inst.c})), "anterial image of a CG is outside class K");
}

template <class Predict>
Outcome check_adjacency(const MixedGraph& g, const MixedGraph& out, NodeSet gone, Predict&& predict,
                        const std::string& what) {
    for (NodeIndex i = 0; i < g.size(); ++i) {
        if (gone.contains(i)) continue;
        for (NodeIndex j = i + 1; j < g.size(); ++j) {
            if (gone.contains(j)) continue;
            const bool adjacent = out.adjacent(out.index(g.label(i)), out.index(g.label(j)));
            if (adjacent != predict(i, j))
                return Outcome::fail(what + " disagrees on " + g.label(i) + "," + g.label(j) +
                                     ": transform=" + std::to_string(adjacent));
        }
    }
    return Outcome::pass();
}

template <class Predict>
Outcome check_patterns(const MixedGraph& g, const MixedGraph& out, NodeSet gone, Predict&& predict,
                       const std::string& what) {
    for (NodeIndex i = 0; i < g.size(); ++i) {
        if (gone.contains(i)) continue;
        for (NodeIndex j = i + 1; j < g.size(); ++j) {
            if (gone.contains(j)) continue;
            if (edge_patterns(out, out.index(g.label(i)), out.index(g.label(j))) != predict(i, j))
                return Outcome::fail(what + " edge types disagree on " + g.label(i) + "," + g.label(j));
        }
    }
    return Outcome::pass();
}

Outcome check_oracle_marginal(const Instance& inst) {
    return check_adjacency(
        inst.g, marginalize(inst.g, inst.m), inst.m,
        [&](NodeIndex i, NodeIndex j) { return marginal_edge_oracle(inst.g, inst.m, i, j); }, "marginal oracle");
}

Outcome check_oracle_conditional(const Instance& inst) {
    return check_adjacency(
        inst.g, condition(inst.g, inst.c), inst.c,
        [&](NodeIndex i, NodeIndex j) { return conditional_edge_oracle(inst.g, inst.c, i, j); },
        "conditional oracle");
}

Outcome check_oracle_subprimitive(const Instance& inst) {
    return check_adjacency(
        inst.g, anterialize(inst.g), {},
        [&](NodeIndex i, NodeIndex j) {
            return subprimitive_walk_exists(inst.g, j, i) || subprimitive_walk_exists(inst.g, i, j);
        },
        "subprimitive walk");
}

Outcome check_oracle_marginal_types(const Instance& inst) {
    return check_patterns(
        inst.g, marginalize(inst.g, inst.m), inst.m,
        [&](NodeIndex i, NodeIndex j) { return marginal_edge_kinds(inst.g, inst.m, i, j); }, "marginal oracle");
}

Outcome check_oracle_conditional_types(const Instance& inst) {
    return check_patterns(
        inst.g, condition(inst.g, inst.c), inst.c,
        [&](NodeIndex i, NodeIndex j) { return conditional_edge_kinds(inst.g, inst.c, i, j); },
        "conditional oracle");
}

Outcome check_oracle_subprimitive_types(const Instance& inst) {
    return check_patterns(
        inst.g, anterialize(inst.g), {},
        [&](NodeIndex i, NodeIndex j) {
            HeadPatterns out = subprimitive_walk_kinds(inst.g, j, i);
            for (auto [hj, hi] : subprimitive_walk_kinds(inst.g, i, j)) out.insert({hi, hj});
            return out;
        },
        "subprimitive walk");
}

Outcome check_vvn(const Instance& inst) {
    const auto witness = non_maximality_witness_vvn(inst.g);
    if (!witness) return Outcome::skip();
    return expect(!is_maximal(inst.g), "witness found on a maximal graph");
}

struct Suite {
    std::string id;
    GraphKind kind;
    std::size_t min_nodes;
    std::size_t max_nodes;
    bool m, c, m1, c1;
    Check check;
};

const std::vector<Suite>& suites() {
    using K = GraphKind;
    static const std::vector<Suite> all = {
        {"separation-oracle", K::CMG, 3, 5, false, false, false, false, check_separation_oracle},
        {"separation-moral", K::CG, 3, 6, false, false, false, false, check_separation_moral},
        {"marginalization", K::CMG, 3, 7, true, false, false, false, check_marginalization},
        {"conditioning", K::CMG, 3, 7, false, true, false, false, check_conditioning},
        {"combined", K::CMG, 3, 7, true, true, false, false, check_combined},
        {"ang", K::AnG, 3, 7, true, true, false, false, check_ang},
        {"composition-marginalization", K::CMG, 3, 7, true, false, true, false, check_composition_marginalization},
        {"composition-conditioning", K::CMG, 3, 7, false, true, false, true, check_composition_conditioning},
        {"composition-combined", K::CMG, 3, 7, true, true, true, true, check_composition_combined},
        {"commutativity-graph", K::CMG, 3, 7, true, true, false, false, check_commutativity_graph},
        {"commutativity-model", K::CMG, 3, 7, true, true, false, false, check_commutativity_model},
        {"closure-marginalize", K::CMG, 3, 7, true, false, false, false, check_closure_marginalize},
        {"closure-condition", K::CMG, 3, 7, false, true, false, false, check_closure_condition},
        {"closure-condition-cg", K::CG, 3, 7, false, true, false, false, check_closure_condition_cg},
        {"closure-anterialize", K::CMG, 3, 7, false, false, false, false, check_closure_anterialize},
        {"anterialize-model", K::CMG, 3, 7, false, false, false, false, check_anterialize_model},
        {"class-h", K::CG, 3, 7, true, false, false, false, check_class_h},
        {"class-h-combined", K::CG, 3, 7, true, true, false, false, check_class_h_combined},
        {"class-k", K::CG, 3, 7, true, true, false, false, check_class_k},
        {"oracle-marginal-edge", K::CMG, 3, 7, true, false, false, false, check_oracle_marginal},
        {"oracle-conditional-edge", K::CMG, 3, 7, false, true, false, false, check_oracle_conditional},
        {"oracle-subprimitive", K::CMG, 3, 7, false, false, false, false, check_oracle_subprimitive},
        {"oracle-marginal-types", K::CMG, 3, 7, true, false, false, false, check_oracle_marginal_types},
        {"oracle-conditional-types", K::CMG, 3, 7, false, true, false, false, check_oracle_conditional_types},
        {"oracle-subprimitive-types", K::CMG, 3, 7, false, false, false, false, check_oracle_subprimitive_types},
        {"vvn-soundness", K::CMG, 3, 6, false, false, false, false, check_vvn},
    };
    return all;
}

Instance make_instance(const Suite& suite, std::uint64_t seed) {
    Rng rng(seed);
    GeneratorConfig cfg;
    cfg.node_count = suite.min_nodes + rng.below(suite.max_nodes - suite.min_nodes + 1);
    cfg.edge_density = 0.2 + 0.5 * rng.uniform();
    cfg.seed = rng.next();
    cfg.kind = suite.kind;
    Instance inst;
    inst.g = random_graph(cfg);
    for (NodeIndex v = 0; v < inst.g.size(); ++v) {
        switch (rng.below(8)) {
            case 0:
            case 1:
                if (suite.m) inst.m.insert(v);
                break;
            case 2:
            case 3:
                if (suite.c) inst.c.insert(v);
                break;
            case 4:
                if (suite.m1) inst.m1.insert(v);
                break;
            case 5:
                if (suite.c1) inst.c1.insert(v);
                break;
            default: break;
        }
    }
    return inst;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Suite& s : suites()) out.push_back(s.id);
        return out;
    }();
    return ids;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
    return seed * 0x9E3779B97F4A7C15ull + index;
}

PropertyReport run_suite(const std::string& id, std::uint64_t seed, std::size_t count) {
    const auto& all = suites();
    auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.id == id; });
    if (it == all.end()) throw Error(Errc::InvalidConfig, "unknown suite '" + id + "'");
    PropertyReport report;
    report.property_id = id;
    for (std::size_t k = 0; k < count; ++k) {
        const Instance inst = make_instance(*it, instance_seed(seed, k));
        const Outcome outcome = run_check(it->check, inst);
        ++report.instances;
        if (outcome.verdict == Verdict::Skip) ++report.skipped;
        if (outcome.verdict != Verdict::Fail) continue;
        ++report.failures;
        if (!report.counterexample) {
            const Instance small = shrink(inst, it->check);
            report.counterexample = describe(small) + " : " + run_check(it->check, small).detail;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Chain graphs are not closed under marginalization

namespace {

MixedGraph default_demo_dag() {
    return MixedGraph::build({"a", "b", "c", "d", "m"}, {{"c", "a", EdgeType::Arrow},
                                                          {"d", "b", EdgeType::Arrow},
                                                          {"m", "a", EdgeType::Arrow},
                                                          {"m", "b", EdgeType::Arrow}});
}

}  // namespace

DemoResult cg_unrepresentability_demo() {
    const std::vector<std::string> survivors = {"a", "b", "c", "d"};
    std::map<std::set<Statement>, MixedGraph> cg_models;
    DemoResult result;
    result.chain_graphs = for_each_graph(survivors, GraphKind::CG, [&](const MixedGraph& g) {
        cg_models.emplace(pairwise_model(g).statements, g);
    });

    auto attempt = [&](const MixedGraph& dag) {
        const NodeSet m = dag.nodes({"m"});
        const IndependenceModel target = restrict_model(pairwise_model(dag), m, {});
        PropertyReport report;
        report.property_id = "cg-unrepresentability";
        report.instances = result.chain_graphs;
        if (!models_equal(pairwise_model(marginalize(dag, m)), target)) {
            ++report.failures;
            report.counterexample = "marginal CMG does not reproduce the marginal model";
        }
        if (auto hit = cg_models.find(target.statements); hit != cg_models.end()) {
            ++report.failures;
            std::string g = render_graph(hit->second);
            std::replace(g.begin(), g.end(), '\n', ';');
            if (!report.counterexample) report.counterexample = "chain graph with the same model: " + g;
        }
        result.report = report;
        result.dag = dag;
        result.marginalized = m;
        return report.failures == 0;
    };

    if (attempt(default_demo_dag())) return result;
    result.default_candidate = false;
    const std::vector<std::string> labels = {"a", "b", "c", "d", "m"};
    bool found = false;
    for_each_graph(labels, GraphKind::CG, [&](const MixedGraph& g) {
        if (found || !contains(classify(g), GraphClass::DAG)) return;
        found = attempt(g);
    });
    return result;
}

}  // namespace cmg
