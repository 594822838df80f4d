#include "cmg/transform.hpp"

#include <deque>
#include <tuple>

#include "cmg/error.hpp"

namespace cmg {

void validate(const MixedGraph& g, const TransformSpec& spec) {
    if (!spec.m.subset_of(g.all()) || !spec.c.subset_of(g.all()))
        throw Error(Errc::UnknownNode, "transform sets mention nodes outside the graph");
    if (spec.m.intersects(spec.c))
        throw Error(Errc::MalformedQuery, "marginalization and conditioning sets overlap");
}

namespace {

void require_subset(const MixedGraph& g, NodeSet s) {
    if (!s.subset_of(g.all())) throw Error(Errc::UnknownNode, "node set mentions nodes outside the graph");
}

MixedGraph remove_nodes(const std::vector<std::string>& labels, Adjacency adj, NodeSet gone) {
    MixedGraph full = MixedGraph::from_adjacency(labels, std::move(adj));
    return induced_subgraph(full, full.all() - gone);
}

// Trislide closure shared by several steps: for every section start i (with
// the flank at i already fixed by the caller), every far endpoint j, and every
// section end w line-reachable from i without touching `avoid` or j, an arrow
// j -> w generates j -> i and an arc j <-> w generates i <-> j.
bool close_trislides(Adjacency& adj, const std::vector<NodeSet>& lines, NodeIndex i, NodeSet avoid) {
    bool changed = false;
    for (NodeIndex j = 0; j < adj.size(); ++j) {
        if (j == i || avoid.contains(j)) continue;
        const NodeSet section = line_reach(lines, i, avoid | NodeSet::single(j));
        if (section.intersects(adj.children[j])) changed |= adj.add(Edge::arrow(j, i));
        if (section.intersects(adj.arc[j])) changed |= adj.add(Edge::arc(i, j));
    }
    return changed;
}

}  // namespace

namespace detail {

Adjacency marginalize_step1(const Adjacency& in, NodeSet m) {
    Adjacency adj = in;
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex mm : m)
            for (NodeIndex i : adj.children[mm]) changed |= close_trislides(adj, adj.line, i, NodeSet::single(mm));
    }
    return adj;
}

}  // namespace detail

MixedGraph marginalize(const MixedGraph& g, NodeSet m) {
    require_cmg(g);
    require_subset(g, m);
    if (m.empty()) return g;
    Adjacency adj = detail::marginalize_step1(g.adjacency(), m);

    // Tripaths i *-* m *-* j with m in M, excluding colliders at m.
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex mm : m) {
            const std::vector<Edge> at = adj.edges_at(mm);
            for (const Edge& e1 : at) {
                for (const Edge& e2 : at) {
                    const NodeIndex i = e1.other(mm), j = e2.other(mm);
                    if (i == j) continue;
                    if (has_head_at(e1, mm) && has_head_at(e2, mm)) continue;
                    const bool head_i = has_head_at(e1, i) || (e1.type == EdgeType::Line && has_head_at(e2, mm));
                    const bool head_j = has_head_at(e2, j) || (e2.type == EdgeType::Line && has_head_at(e1, mm));
                    changed |= adj.add_with_heads(i, j, head_i, head_j);
                }
            }
        }
    }
    return remove_nodes(g.labels(), std::move(adj), m);
}

MixedGraph condition(const MixedGraph& g, NodeSet c) {
    require_cmg(g);
    require_subset(g, c);
    if (c.empty()) return g;
    const NodeSet s = c | anteriors(g, c);
    Adjacency adj = g.adjacency();

    // s <-> i -- ... -- w <-* j
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex sv : s)
            for (NodeIndex i : adj.arc[sv]) changed |= close_trislides(adj, adj.line, i, NodeSet::single(sv));
    }

    // i *-> u -- ... -- w <-* j with the section inside S, sections built from
    // the lines present before this step.
    const std::vector<NodeSet> lines = adj.line;
    changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex u : s) {
            const NodeSet left = adj.parents[u] | adj.arc[u];
            for (NodeIndex i : left) {
                for (NodeIndex j = 0; j < adj.size(); ++j) {
                    if (j == i) continue;
                    const NodeSet section = line_reach(lines, u, NodeSet{i, j});
                    if (section.contains(i) || section.contains(j)) continue;
                    for (NodeIndex w : section) {
                        for (bool head_i : {false, true}) {
                            const bool flank_i = head_i ? adj.arc[u].contains(i) : adj.parents[u].contains(i);
                            if (!flank_i) continue;
                            if (adj.parents[w].contains(j)) changed |= adj.add_with_heads(i, j, head_i, false);
                            if (adj.arc[w].contains(j)) changed |= adj.add_with_heads(i, j, head_i, true);
                        }
                    }
                }
            }
        }
    }

    // Drop arrowheads at S.
    Adjacency out(adj.size());
    for (const Edge& e : adj.edges()) {
        switch (e.type) {
            case EdgeType::Line: out.add(e); break;
            case EdgeType::Arrow: out.add(s.contains(e.to) ? Edge::line(e.from, e.to) : e); break;
            case EdgeType::Arc: {
                const bool a = s.contains(e.from), b = s.contains(e.to);
                if (a && b) out.add(Edge::line(e.from, e.to));
                else if (a) out.add(Edge::arrow(e.from, e.to));
                else if (b) out.add(Edge::arrow(e.to, e.from));
                else out.add(e);
                break;
            }
        }
    }
    return remove_nodes(g.labels(), std::move(out), c);
}

MixedGraph marginalize_and_condition(const MixedGraph& g, const TransformSpec& spec, Order order) {
    validate(g, spec);
    if (order == Order::MarginalizeFirst) {
        const MixedGraph h = marginalize(g, spec.m);
        return condition(h, translate(g, spec.c, h));
    }
    const MixedGraph h = condition(g, spec.c);
    return marginalize(h, translate(g, spec.m, h));
}

MixedGraph anterialize(const MixedGraph& h) {
    require_cmg(h);
    Adjacency adj = h.adjacency();
    const std::vector<NodeSet> ant = anterior_table(adj);
    const std::vector<NodeSet> lines = adj.line;

    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeIndex i = 0; i < adj.size(); ++i) {
            for (NodeIndex k : adj.arc[i] & ant[i]) {
                // j *-> o -- ... -- i <-> k
                changed |= close_trislides(adj, lines, i, NodeSet::single(k));
                // j *-> k1 -- ... -- k <-> i, section anterior to i
                for (NodeIndex j = 0; j < adj.size(); ++j) {
                    if (j == i || j == k) continue;
                    const NodeSet section = line_reach(lines, k, NodeSet{i, j});
                    if (section.intersects(adj.children[j])) changed |= adj.add(Edge::arrow(j, i));
                    if (section.intersects(adj.arc[j])) changed |= adj.add(Edge::arc(i, j));
                }
            }
        }
    }

    Adjacency out(adj.size());
    for (const Edge& e : adj.edges()) {
        if (e.type != EdgeType::Arc) {
            out.add(e);
            continue;
        }
        const bool from_ant = ant[e.to].contains(e.from);
        const bool to_ant = ant[e.from].contains(e.to);
        if (from_ant && to_ant) out.add(Edge::line(e.from, e.to));
        else if (from_ant) out.add(Edge::arrow(e.from, e.to));
        else if (to_ant) out.add(Edge::arrow(e.to, e.from));
        else out.add(e);
    }
    return MixedGraph::from_adjacency(h.labels(), std::move(out));
}

MixedGraph ang_transform(const MixedGraph& g, const TransformSpec& spec) {
    validate(g, spec);
    const MixedGraph conditioned = condition(g, spec.c);
    const MixedGraph marginal = marginalize(conditioned, translate(g, spec.m, conditioned));
    return anterialize(marginal);
}

// ---------------------------------------------------------------------------
// Classes H and K

namespace {

enum class ArcRule { H, K };

bool trislides_ok(const MixedGraph& g, ArcRule rule) {
    const Adjacency& adj = g.adjacency();
    for (NodeIndex i = 0; i < g.size(); ++i) {
        for (NodeIndex k : adj.arc[i]) {
            for (NodeIndex l = 0; l < g.size(); ++l) {
                if (l == i || l == k) continue;
                const NodeSet section = line_reach(adj.line, i, NodeSet{k, l}) - NodeSet::single(i);
                for (NodeIndex j : section) {
                    if (adj.children[l].contains(j) && !adj.children[l].contains(i)) return false;
                    if (!adj.arc[l].contains(j)) continue;
                    const bool ok = rule == ArcRule::H
                                        ? adj.arc[k].contains(j) && adj.arc[i].contains(l) && adj.arc[i].contains(j)
                                        : adj.arc[j].contains(k) && adj.arc[i].contains(l) && adj.line[i].contains(j);
                    if (!ok) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool in_class_H(const MixedGraph& g) {
    require_cmg(g);
    return trislides_ok(g, ArcRule::H);
}

bool in_class_K(const MixedGraph& g) {
    require_anterial(g);
    return trislides_ok(g, ArcRule::K);
}

// ---------------------------------------------------------------------------
// Edge oracles

HeadPatterns edge_patterns(const MixedGraph& g, NodeIndex i, NodeIndex j) {
    HeadPatterns out;
    for (const Edge& e : g.adjacency().edges_between(i, j)) out.insert({has_head_at(e, i), has_head_at(e, j)});
    return out;
}

namespace {

void require_pair(const MixedGraph& g, NodeIndex i, NodeIndex j) {
    if (i >= g.size() || j >= g.size()) throw Error(Errc::UnknownNode, "node index out of range");
    if (i == j) throw Error(Errc::MalformedQuery, "edge oracles need two distinct nodes");
}

// Generic breadth-first search over small tuple states.
template <class State, class Expand>
void explore(std::vector<State> start, Expand&& expand) {
    std::set<State> seen(start.begin(), start.end());
    std::deque<State> queue(start.begin(), start.end());
    while (!queue.empty()) {
        const State st = queue.front();
        queue.pop_front();
        expand(st, [&](const State& next) {
            if (seen.insert(next).second) queue.push_back(next);
        });
    }
}

}  // namespace

HeadPatterns marginal_edge_kinds(const MixedGraph& g, NodeSet m, NodeIndex i, NodeIndex j) {
    require_cmg(g);
    require_subset(g, m);
    require_pair(g, i, j);
    if (m.contains(i) || m.contains(j)) throw Error(Errc::MalformedQuery, "edge endpoints must lie outside M");
    const Adjacency adj = detail::marginalize_step1(g.adjacency(), m);

    // (node, still in first section, entry head of current section, head at i's section)
    using State = std::tuple<NodeIndex, bool, bool, bool>;
    HeadPatterns out;
    explore<State>({{i, true, false, false}}, [&](const State& st, auto&& push) {
        const auto [v, first, entry_head, head_i] = st;
        for (const Edge& e : adj.edges_at(v)) {
            const NodeIndex x = e.other(v);
            if (e.type == EdgeType::Line) {
                if (x == j) out.insert(first ? HeadPattern{false, false} : HeadPattern{head_i, entry_head});
                else if (m.contains(x)) push({x, first, entry_head, head_i});
                continue;
            }
            bool hi = head_i;
            if (first) hi = has_head_at(e, v);
            else if (entry_head && has_head_at(e, v)) continue;  // inner collider section
            if (x == j) out.insert({hi, has_head_at(e, x)});
            else if (m.contains(x)) push({x, false, has_head_at(e, x), hi});
        }
    });
    return out;
}

bool marginal_edge_oracle(const MixedGraph& g, NodeSet m, NodeIndex i, NodeIndex j) {
    return !marginal_edge_kinds(g, m, i, j).empty();
}

HeadPatterns conditional_edge_kinds(const MixedGraph& g, NodeSet c, NodeIndex i, NodeIndex j) {
    require_cmg(g);
    require_subset(g, c);
    require_pair(g, i, j);
    if (c.contains(i) || c.contains(j)) throw Error(Errc::MalformedQuery, "edge endpoints must lie outside C");
    const Adjacency& adj = g.adjacency();
    const NodeSet s = c | anteriors(g, c);
    NodeSet spouses_of_s;
    for (NodeIndex v : s) spouses_of_s |= adj.arc[v];
    const bool i_may_grow = spouses_of_s.contains(i);
    const bool j_may_grow = spouses_of_s.contains(j);

    HeadPatterns raw;
    if (adj.line[i].contains(j)) raw.insert({false, false});

    // A grown endpoint section must not contain the node beyond it; only
    // then is it the section of a trislide that step 2 can close.
    auto endpoint_section = [&](NodeIndex end, bool may_grow, NodeIndex beyond) {
        return may_grow ? line_reach(adj.line, end, NodeSet::single(beyond)) : NodeSet::single(end);
    };

    // j's section may be grown when entered from v with a head at x.
    auto closes_at_j = [&](NodeIndex v, NodeIndex x, bool head_x) {
        return j_may_grow && head_x && x != j && endpoint_section(j, true, v).contains(x);
    };

    // (node, entry head, section so far single node, section inside S, head at i's section)
    using State = std::tuple<NodeIndex, bool, bool, bool, bool>;
    std::vector<State> start;
    for (NodeIndex x = 0; x < g.size(); ++x) {
        if (x == i) continue;
        for (NodeIndex v : endpoint_section(i, i_may_grow, x)) {
            for (const Edge& e : adj.edges_between(v, x)) {
                if (e.type == EdgeType::Line) continue;
                const bool hi = has_head_at(e, v);
                if (v != i && !hi) continue;
                start.push_back({x, has_head_at(e, x), true, s.contains(x), hi});
                if (closes_at_j(v, x, has_head_at(e, x))) raw.insert({hi, true});
            }
        }
    }
    explore<State>(std::move(start), [&](const State& st, auto&& push) {
        const auto [v, entry_head, single, in_s, head_i] = st;
        if (v == j && single) raw.insert({head_i, entry_head});
        for (const Edge& e : adj.edges_at(v)) {
            const NodeIndex x = e.other(v);
            if (e.type == EdgeType::Line) {
                push({x, entry_head, false, in_s && s.contains(x), head_i});
                continue;
            }
            if (!(entry_head && has_head_at(e, v) && in_s)) continue;
            push({x, has_head_at(e, x), true, s.contains(x), head_i});
            if (closes_at_j(v, x, has_head_at(e, x))) raw.insert({head_i, true});
        }
    });

    HeadPatterns out;
    for (auto [hi, hj] : raw) out.insert({hi && !s.contains(i), hj && !s.contains(j)});
    return out;
}

bool conditional_edge_oracle(const MixedGraph& g, NodeSet c, NodeIndex i, NodeIndex j) {
    return !conditional_edge_kinds(g, c, i, j).empty();
}

HeadPatterns subprimitive_walk_kinds(const MixedGraph& h, NodeIndex j, NodeIndex i) {
    require_cmg(h);
    require_pair(h, i, j);
    const Adjacency& adj = h.adjacency();
    const std::vector<NodeSet> ant = anterior_table(adj);
    const NodeSet allowed = ant[i] | NodeSet::single(i);

    HeadPatterns raw;  // (head at i, head at j)
    if (adj.line[i].contains(j)) raw.insert({false, false});

    // (node, entry head, section so far single node, section inside allowed, head at j)
    using State = std::tuple<NodeIndex, bool, bool, bool, bool>;
    std::vector<State> start;
    for (const Edge& e : adj.edges_at(j)) {
        if (e.type == EdgeType::Line) continue;
        const NodeIndex x = e.other(j);
        start.push_back({x, has_head_at(e, x), true, allowed.contains(x), has_head_at(e, j)});
    }
    explore<State>(std::move(start), [&](const State& st, auto&& push) {
        const auto [v, entry_head, single, inside, head_j] = st;
        if (v == i && single) raw.insert({entry_head, head_j});
        for (const Edge& e : adj.edges_at(v)) {
            const NodeIndex x = e.other(v);
            if (e.type == EdgeType::Line) {
                push({x, entry_head, false, inside && allowed.contains(x), head_j});
                continue;
            }
            if (!(entry_head && has_head_at(e, v) && inside)) continue;
            push({x, has_head_at(e, x), true, allowed.contains(x), head_j});
        }
    });

    HeadPatterns out;
    for (auto [hi, hj] : raw) out.insert({hi && !ant[j].contains(i), hj && !ant[i].contains(j)});
    return out;
}

bool subprimitive_walk_exists(const MixedGraph& h, NodeIndex j, NodeIndex i) {
    return !subprimitive_walk_kinds(h, j, i).empty();
}

}  // namespace cmg
