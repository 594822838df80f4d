#include "cmg/separation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cmg/error.hpp"

namespace cmg {

void validate(const MixedGraph& g, const SeparationQuery& q) {
    const NodeSet all = g.all();
    if (!q.a.subset_of(all) || !q.b.subset_of(all) || !q.c.subset_of(all))
        throw Error(Errc::MalformedQuery, "query mentions nodes outside the graph");
    if (q.a.intersects(q.b) || q.a.intersects(q.c) || q.b.intersects(q.c))
        throw Error(Errc::MalformedQuery, "query sets must be pairwise disjoint");
}

namespace {

// Search state: a section entered at `node`, through an edge with (head) or
// without (tail) an arrowhead at the entry node. The start section counts as
// tail-entered so that it can never act as a collider.
struct State {
    NodeIndex node;
    bool head;
    std::size_t id() const { return node * 2 + (head ? 1 : 0); }
};

struct Step {
    std::size_t prev = 0;
    NodeIndex exit = 0;   // last node of the previous section
    Edge edge;            // edge leaving it
    bool collider = false;
    bool reached = false;
    bool start = false;
};

class SectionSearch {
public:
    SectionSearch(const MixedGraph& g, NodeSet c) : adj_(g.adjacency()), c_(c), steps_(g.size() * 2) {}

    void run(NodeSet a) {
        std::deque<State> queue;
        for (NodeIndex s : a - c_) {
            State st{s, false};
            steps_[st.id()].reached = steps_[st.id()].start = true;
            queue.push_back(st);
        }
        while (!queue.empty()) {
            const State st = queue.front();
            queue.pop_front();
            expand(st, queue);
        }
    }

    /// Endpoints of connecting walks (final section avoids C).
    NodeSet endpoints() const {
        NodeSet out;
        for (NodeIndex v = 0; v < adj_.size(); ++v) {
            if (c_.contains(v)) continue;
            if (steps_[v * 2].reached || steps_[v * 2 + 1].reached) out |= line_reach(adj_.line, v, c_);
        }
        return out;
    }

    std::optional<Walk> witness(NodeSet b) const {
        for (std::size_t id = 0; id < steps_.size(); ++id) {
            if (!steps_[id].reached) continue;
            const NodeIndex u = id / 2;
            if (c_.contains(u)) continue;
            const NodeSet hit = line_reach(adj_.line, u, c_) & b;
            if (hit.empty()) continue;
            return rebuild(id, hit.front());
        }
        return std::nullopt;
    }

private:
    void push(State next, std::size_t from, NodeIndex exit, const Edge& e, bool collider, std::deque<State>& queue) {
        Step& s = steps_[next.id()];
        if (s.reached) return;
        s = Step{from, exit, e, collider, true, false};
        queue.push_back(next);
    }

    void expand(State st, std::deque<State>& queue) {
        const NodeIndex u = st.node;
        const std::size_t from = st.id();
        if (!c_.contains(u)) {
            for (NodeIndex w : line_reach(adj_.line, u, c_)) {
                for (NodeIndex x : adj_.children[w]) push({x, true}, from, w, Edge::arrow(w, x), false, queue);
                if (st.head) continue;
                for (NodeIndex x : adj_.parents[w]) push({x, false}, from, w, Edge::arrow(x, w), false, queue);
                for (NodeIndex x : adj_.arc[w]) push({x, true}, from, w, Edge::arc(w, x), false, queue);
            }
        }
        if (st.head) {
            const NodeSet comp = line_reach(adj_.line, u, {});
            if (!comp.intersects(c_)) return;
            for (NodeIndex w : comp) {
                for (NodeIndex x : adj_.parents[w]) push({x, false}, from, w, Edge::arrow(x, w), true, queue);
                for (NodeIndex x : adj_.arc[w]) push({x, true}, from, w, Edge::arc(w, x), true, queue);
            }
        }
    }

    void append_section(Walk& walk, NodeIndex u, NodeIndex w, bool collider) const {
        auto extend = [&](NodeIndex from, NodeIndex to, NodeSet blocked) {
            const Walk part = *line_path(adj_, from, to, blocked);
            for (const Edge& e : part.edges) walk.push(e);
        };
        if (!collider) {
            extend(u, w, c_);
            return;
        }
        const NodeSet comp = line_reach(adj_.line, u, {});
        const NodeIndex hit = (comp & c_).front();
        extend(u, hit, {});
        extend(hit, w, {});
    }

    Walk rebuild(std::size_t last, NodeIndex b) const {
        std::vector<std::size_t> chain{last};
        while (!steps_[chain.back()].start) chain.push_back(steps_[chain.back()].prev);
        std::reverse(chain.begin(), chain.end());
        Walk walk{{chain.front() / 2}, {}};
        for (std::size_t k = 1; k < chain.size(); ++k) {
            const Step& s = steps_[chain[k]];
            append_section(walk, chain[k - 1] / 2, s.exit, s.collider);
            walk.push(s.edge);
        }
        append_section(walk, last / 2, b, false);
        return walk;
    }

    const Adjacency& adj_;
    NodeSet c_;
    std::vector<Step> steps_;
};

}  // namespace

NodeSet connected_endpoints(const MixedGraph& g, NodeSet a, NodeSet c) {
    SectionSearch search(g, c);
    search.run(a);
    return search.endpoints();
}

bool c_separated(const MixedGraph& g, const SeparationQuery& q) {
    require_cmg(g);
    validate(g, q);
    if (q.a.empty() || q.b.empty()) return true;
    return !connected_endpoints(g, q.a, q.c).intersects(q.b);
}

std::optional<Walk> c_connecting_witness(const MixedGraph& g, const SeparationQuery& q) {
    require_cmg(g);
    validate(g, q);
    if (q.a.empty() || q.b.empty()) return std::nullopt;
    SectionSearch search(g, q.c);
    search.run(q.a);
    return search.witness(q.b);
}

bool moral_separated(const MixedGraph& g, const SeparationQuery& q) {
    require_chain_graph(g);
    validate(g, q);
    if (q.a.empty() || q.b.empty()) return true;
    const NodeSet x = q.a | q.b | q.c;
    const MixedGraph sub = induced_subgraph(g, x | anteriors(g, x));
    const MixedGraph moral = moral_graph(sub);
    const NodeSet a = translate(g, q.a, sub);
    const NodeSet b = translate(g, q.b, sub);
    const NodeSet c = translate(g, q.c, sub);
    NodeSet seen;
    for (NodeIndex s : a) seen |= line_reach(moral.adjacency().line, s, c);
    return !seen.intersects(b);
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

struct OracleState {
    NodeIndex node;
    bool entry_head;
    bool first;
    std::uint64_t section;  // WalksInC: 1 if the section met C; PathsInAntC: node mask

    friend auto operator<=>(const OracleState&, const OracleState&) = default;
};

}  // namespace

bool bounded_walk_oracle(const MixedGraph& g, const SeparationQuery& q, OracleMode mode, std::size_t maxlen) {
    require_cmg(g);
    validate(g, q);
    const std::size_t n = g.size();
    if (maxlen == 0) maxlen = 4 * n * n;
    if (maxlen < oracle_bound(n))
        throw Error(Errc::BoundTooSmall, "maxlen " + std::to_string(maxlen) + " is below the bound " +
                                             std::to_string(oracle_bound(n)));
    if (q.a.empty() || q.b.empty()) return true;

    const Adjacency& adj = g.adjacency();
    const NodeSet s_set = q.c | anteriors(g, q.c);
    const bool paths = mode == OracleMode::PathsInAntC;

    auto meets_c = [&](std::uint64_t sec) { return paths ? NodeSet(sec).intersects(q.c) : sec != 0; };
    auto collider_ok = [&](std::uint64_t sec) { return paths ? NodeSet(sec).subset_of(s_set) : sec != 0; };
    auto fresh = [&](NodeIndex x) -> std::uint64_t {
        return paths ? NodeSet::single(x).bits() : (q.c.contains(x) ? 1 : 0);
    };

    std::set<OracleState> seen;
    std::vector<OracleState> layer;
    for (NodeIndex a : q.a) {
        OracleState st{a, false, true, fresh(a)};
        if (seen.insert(st).second) layer.push_back(st);
    }
    for (std::size_t len = 0; !layer.empty(); ++len) {
        for (const OracleState& st : layer)
            if (q.b.contains(st.node) && !meets_c(st.section)) return false;
        if (len == maxlen) break;
        std::vector<OracleState> next;
        auto offer = [&](const OracleState& st) {
            if (seen.insert(st).second) next.push_back(st);
        };
        for (const OracleState& st : layer) {
            const NodeIndex v = st.node;
            for (const Edge& e : adj.edges_at(v)) {
                const NodeIndex x = e.other(v);
                if (e.type == EdgeType::Line) {
                    if (paths && NodeSet(st.section).contains(x)) continue;
                    offer({x, st.entry_head, st.first, st.section | fresh(x)});
                    continue;
                }
                const bool collider = !st.first && st.entry_head && has_head_at(e, v);
                if (collider ? !collider_ok(st.section) : meets_c(st.section)) continue;
                offer({x, has_head_at(e, x), false, fresh(x)});
            }
        }
        layer = std::move(next);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Models

namespace {

std::string set_string(const std::vector<std::string>& ground, NodeSet s) {
    std::string out = "{";
    bool first = true;
    for (NodeIndex v : s) {
        if (!first) out += ',';
        out += ground[v];
        first = false;
    }
    return out + "}";
}

std::string statement_string(const std::vector<std::string>& ground, const Statement& st) {
    return ground[st.i] + " ⊥ " + ground[st.j] + " | " + set_string(ground, st.c);
}

}  // namespace

std::vector<std::string> IndependenceModel::lines() const {
    std::vector<std::string> out;
    for (const Statement& st : statements) out.push_back(statement_string(ground, st));
    return out;
}

IndependenceModel pairwise_model(const MixedGraph& g, std::size_t cap) {
    if (g.size() > cap)
        throw Error(Errc::TooLarge, "model enumeration is capped at " + std::to_string(cap) + " nodes");
    require_cmg(g);
    IndependenceModel model;
    model.ground = g.labels();
    const NodeSet all = g.all();
    for (NodeIndex i = 0; i < g.size(); ++i) {
        for_each_subset(all - NodeSet::single(i), [&](NodeSet c) {
            const NodeSet reach = connected_endpoints(g, NodeSet::single(i), c);
            for (NodeIndex j : all - c - reach - NodeSet::first(i + 1)) model.statements.insert({i, j, c});
        });
    }
    return model;
}

bool models_equal(const IndependenceModel& m1, const IndependenceModel& m2) {
    if (m1.ground != m2.ground) throw Error(Errc::GroundSetMismatch, "models are over different node sets");
    return m1.statements == m2.statements;
}

IndependenceModel restrict_model(const IndependenceModel& model, NodeSet m, NodeSet c) {
    const NodeSet gone = m | c;
    IndependenceModel out;
    std::vector<NodeIndex> remap(model.ground.size(), 0);
    for (NodeIndex v = 0; v < model.ground.size(); ++v) {
        if (gone.contains(v)) continue;
        remap[v] = out.ground.size();
        out.ground.push_back(model.ground[v]);
    }
    for (const Statement& st : model.statements) {
        if (gone.contains(st.i) || gone.contains(st.j)) continue;
        if (!c.subset_of(st.c) || st.c.intersects(m)) continue;
        NodeSet d;
        for (NodeIndex v : st.c - c) d.insert(remap[v]);
        out.statements.insert({remap[st.i], remap[st.j], d});
    }
    return out;
}

std::vector<std::string> model_difference(const IndependenceModel& left, const IndependenceModel& right,
                                          std::size_t limit) {
    std::vector<std::string> out;
    for (const Statement& st : left.statements) {
        if (out.size() >= limit) return out;
        if (!right.statements.count(st)) out.push_back("-" + statement_string(left.ground, st));
    }
    for (const Statement& st : right.statements) {
        if (out.size() >= limit) return out;
        if (!left.statements.count(st)) out.push_back("+" + statement_string(right.ground, st));
    }
    return out;
}

bool is_maximal(const MixedGraph& g, std::size_t cap) {
    const IndependenceModel model = pairwise_model(g, cap);
    std::set<std::pair<NodeIndex, NodeIndex>> separable;
    for (const Statement& st : model.statements) separable.insert({st.i, st.j});
    for (NodeIndex i = 0; i < g.size(); ++i)
        for (NodeIndex j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j) && !separable.count({i, j})) return false;
    return true;
}

std::optional<VvnWitness> non_maximality_witness_vvn(const MixedGraph& g) {
    require_cmg(g);
    const Adjacency& adj = g.adjacency();
    auto head_edges = [&](NodeIndex from) {
        std::vector<Edge> out;
        for (NodeIndex u : adj.children[from]) out.push_back(Edge::arrow(from, u));
        for (NodeIndex u : adj.arc[from]) out.push_back(Edge::arc(from, u));
        return out;
    };
    for (NodeIndex i = 0; i < g.size(); ++i) {
        for (NodeIndex j = 0; j < g.size(); ++j) {
            if (i == j || g.adjacent(i, j)) continue;
            const NodeSet ends = NodeSet{i, j};
            for (const Edge& ei : head_edges(i)) {
                const NodeIndex u = ei.other(i);
                if (ends.contains(u)) continue;
                const NodeSet section = line_reach(adj.line, u, ends);
                for (const Edge& ej : head_edges(j)) {
                    const NodeIndex w = ej.other(j);
                    if (!section.contains(w)) continue;
                    for (NodeIndex k : section) {
                        NodeIndex target;
                        if (adj.children[k].contains(j)) target = j;
                        else if (adj.children[k].contains(i)) target = i;
                        else continue;
                        Walk walk{{i}, {}};
                        walk.push(ei);
                        const Walk to_k = *line_path(adj, u, k, ends);
                        const Walk to_w = *line_path(adj, k, w, ends);
                        for (const Edge& e : to_k.edges) walk.push(e);
                        for (const Edge& e : to_w.edges) walk.push(e);
                        walk.push(ej);
                        return VvnWitness{i, j, k, target, std::move(walk)};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace cmg
