#include "cmg/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cmg/error.hpp"

namespace cmg {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::LoopEdge: return "LoopEdge";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::BlockedStart: return "BlockedStart";
        case Errc::NotAChainGraph: return "NotAChainGraph";
        case Errc::NotACMG: return "NotACMG";
        case Errc::NotAnAnG: return "NotAnAnG";
        case Errc::MalformedQuery: return "MalformedQuery";
        case Errc::BoundTooSmall: return "BoundTooSmall";
        case Errc::TooLarge: return "TooLarge";
        case Errc::GroundSetMismatch: return "GroundSetMismatch";
        case Errc::InvalidConfig: return "InvalidConfig";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

std::string_view to_string(EdgeType t) {
    switch (t) {
        case EdgeType::Line: return "--";
        case EdgeType::Arrow: return "->";
        case EdgeType::Arc: return "<->";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Adjacency

bool Adjacency::has(const Edge& e) const {
    switch (e.type) {
        case EdgeType::Line: return line[e.from].contains(e.to);
        case EdgeType::Arc: return arc[e.from].contains(e.to);
        case EdgeType::Arrow: return children[e.from].contains(e.to);
    }
    return false;
}

bool Adjacency::add(const Edge& e) {
    if (has(e)) return false;
    switch (e.type) {
        case EdgeType::Line:
            line[e.from].insert(e.to);
            line[e.to].insert(e.from);
            break;
        case EdgeType::Arc:
            arc[e.from].insert(e.to);
            arc[e.to].insert(e.from);
            break;
        case EdgeType::Arrow:
            children[e.from].insert(e.to);
            parents[e.to].insert(e.from);
            break;
    }
    return true;
}

bool Adjacency::add_with_heads(NodeIndex i, NodeIndex j, bool head_i, bool head_j) {
    if (head_i && head_j) return add(Edge::arc(i, j));
    if (head_i) return add(Edge::arrow(j, i));
    if (head_j) return add(Edge::arrow(i, j));
    return add(Edge::line(i, j));
}

std::vector<Edge> Adjacency::edges_at(NodeIndex i) const {
    std::vector<Edge> out;
    for (NodeIndex j : line[i]) out.push_back(Edge::line(i, j));
    for (NodeIndex j : children[i]) out.push_back(Edge::arrow(i, j));
    for (NodeIndex j : parents[i]) out.push_back(Edge::arrow(j, i));
    for (NodeIndex j : arc[i]) out.push_back(Edge::arc(i, j));
    return out;
}

std::vector<Edge> Adjacency::edges_between(NodeIndex i, NodeIndex j) const {
    std::vector<Edge> out;
    if (line[i].contains(j)) out.push_back(Edge::line(i, j));
    if (children[i].contains(j)) out.push_back(Edge::arrow(i, j));
    if (children[j].contains(i)) out.push_back(Edge::arrow(j, i));
    if (arc[i].contains(j)) out.push_back(Edge::arc(i, j));
    return out;
}

std::vector<Edge> Adjacency::edges() const {
    std::vector<Edge> out;
    const std::size_t n = size();
    for (NodeIndex i = 0; i < n; ++i) {
        for (NodeIndex j : line[i])
            if (i < j) out.push_back(Edge::line(i, j));
        for (NodeIndex j : children[i]) out.push_back(Edge::arrow(i, j));
        for (NodeIndex j : arc[i])
            if (i < j) out.push_back(Edge::arc(i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// MixedGraph

MixedGraph MixedGraph::build(std::vector<std::string> nodes, const std::vector<LabeledEdge>& edges) {
    for (const auto& n : nodes)
        if (n.empty()) throw Error(Errc::UnknownNode, "node labels must be non-empty");
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.size() > NodeSet::capacity)
        throw Error(Errc::TooLarge, "graphs are limited to " + std::to_string(NodeSet::capacity) + " nodes");

    MixedGraph g;
    g.labels_ = std::move(nodes);
    g.adj_ = Adjacency(g.labels_.size());
    for (const auto& e : edges) {
        if (e.from == e.to) throw Error(Errc::LoopEdge, "loop edge at node '" + e.from + "'");
        const NodeIndex a = g.index(e.from);
        const NodeIndex b = g.index(e.to);
        switch (e.type) {
            case EdgeType::Line: g.adj_.add(Edge::line(a, b)); break;
            case EdgeType::Arc: g.adj_.add(Edge::arc(a, b)); break;
            case EdgeType::Arrow: g.adj_.add(Edge::arrow(a, b)); break;
        }
    }
    return g;
}

MixedGraph MixedGraph::from_adjacency(std::vector<std::string> labels, Adjacency adj) {
    MixedGraph g;
    g.labels_ = std::move(labels);
    g.adj_ = std::move(adj);
    return g;
}

MixedGraph build_graph(std::vector<std::string> nodes, const std::vector<LabeledEdge>& edges) {
    return MixedGraph::build(std::move(nodes), edges);
}

std::optional<NodeIndex> MixedGraph::find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<NodeIndex>(it - labels_.begin());
}

NodeIndex MixedGraph::index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(Errc::UnknownNode, "unknown node '" + std::string(label) + "'");
}

NodeSet MixedGraph::nodes(const std::vector<std::string>& labels) const {
    NodeSet s;
    for (const auto& l : labels) s.insert(index(l));
    return s;
}

NodeSet MixedGraph::nodes(std::initializer_list<std::string_view> labels) const {
    NodeSet s;
    for (auto l : labels) s.insert(index(l));
    return s;
}

std::vector<std::string> MixedGraph::labels_of(NodeSet s) const {
    std::vector<std::string> out;
    for (NodeIndex i : s) out.push_back(labels_[i]);
    return out;
}

std::size_t MixedGraph::edge_count() const {
    std::size_t twice = 0;
    for (NodeIndex i = 0; i < size(); ++i)
        twice += adj_.line[i].size() + adj_.arc[i].size() + adj_.children[i].size() + adj_.parents[i].size();
    return twice / 2;
}

bool MixedGraph::is_simple() const {
    for (NodeIndex i = 0; i < size(); ++i) {
        const NodeSet kinds[] = {adj_.line[i], adj_.arc[i], adj_.children[i], adj_.parents[i]};
        NodeSet seen;
        for (NodeSet k : kinds) {
            if (seen.intersects(k)) return false;
            seen |= k;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Anteriority

namespace {

// Nodes that reach `targets` through lines and forward arrows (targets included).
NodeSet reverse_semidirected_closure(const Adjacency& adj, NodeSet targets) {
    NodeSet seen = targets;
    std::vector<NodeIndex> stack(targets.begin(), targets.end());
    while (!stack.empty()) {
        NodeIndex v = stack.back();
        stack.pop_back();
        for (NodeIndex u : (adj.line[v] | adj.parents[v]) - seen) {
            seen.insert(u);
            stack.push_back(u);
        }
    }
    return seen;
}

// Nodes reachable from i by a semi-directed walk of length >= 1.
NodeSet semidirected_successors(const Adjacency& adj, NodeIndex i) {
    NodeSet seen;
    std::vector<NodeIndex> stack{i};
    while (!stack.empty()) {
        NodeIndex v = stack.back();
        stack.pop_back();
        for (NodeIndex u : (adj.line[v] | adj.children[v]) - seen) {
            seen.insert(u);
            stack.push_back(u);
        }
    }
    return seen;
}

}  // namespace

std::vector<NodeSet> anterior_table(const Adjacency& adj) {
    std::vector<NodeSet> ant(adj.size());
    for (NodeIndex i = 0; i < adj.size(); ++i)
        ant[i] = reverse_semidirected_closure(adj, NodeSet::single(i)) - NodeSet::single(i);
    return ant;
}

NodeSet anteriors(const MixedGraph& g, NodeSet a) {
    if (!a.subset_of(g.all())) throw Error(Errc::UnknownNode, "anteriors: node set not in graph");
    NodeSet out;
    for (NodeIndex i : a) out |= reverse_semidirected_closure(g.adjacency(), NodeSet::single(i)) - NodeSet::single(i);
    return out - a;
}

NodeSet ancestors(const MixedGraph& g, NodeIndex i) {
    if (i >= g.size()) throw Error(Errc::UnknownNode, "ancestors: node index out of range");
    NodeSet seen;
    std::vector<NodeIndex> stack{i};
    while (!stack.empty()) {
        NodeIndex v = stack.back();
        stack.pop_back();
        for (NodeIndex u : g.pa(v) - seen) {
            seen.insert(u);
            stack.push_back(u);
        }
    }
    seen.erase(i);
    return seen;
}

// ---------------------------------------------------------------------------
// Classes

bool has_semidirected_cycle_with_arrow(const MixedGraph& g) {
    const Adjacency& adj = g.adjacency();
    for (NodeIndex u = 0; u < g.size(); ++u) {
        for (NodeIndex v : adj.children[u]) {
            if (v == u || semidirected_successors(adj, v).contains(u)) return true;
        }
    }
    return false;
}

bool is_cmg(const MixedGraph& g) { return !has_semidirected_cycle_with_arrow(g); }

namespace {

bool has_any(const std::vector<NodeSet>& sets) {
    return std::any_of(sets.begin(), sets.end(), [](NodeSet s) { return !s.empty(); });
}

}  // namespace

bool is_chain_graph(const MixedGraph& g) { return !has_any(g.adjacency().arc) && is_cmg(g); }

bool is_anterial(const MixedGraph& g) {
    if (!is_cmg(g) || !g.is_simple()) return false;
    const auto ant = anterior_table(g.adjacency());
    for (NodeIndex i = 0; i < g.size(); ++i)
        if (g.sp(i).intersects(ant[i])) return false;
    return true;
}

GraphClass classify(const MixedGraph& g) {
    GraphClass out = GraphClass::None;
    const Adjacency& adj = g.adjacency();
    const bool arcs = has_any(adj.arc);
    const bool arrows = has_any(adj.children);
    const bool lines = has_any(adj.line);
    if (!arcs && !arrows) out |= GraphClass::UG;
    if (!is_cmg(g)) return out;
    out |= GraphClass::CMG;
    if (!arcs) {
        out |= GraphClass::CG;
        if (!lines) out |= GraphClass::DAG;
    }
    if (is_anterial(g)) out |= GraphClass::AnG;
    return out;
}

std::string to_string(GraphClass flags) {
    static constexpr std::pair<GraphClass, const char*> names[] = {
        {GraphClass::UG, "UG"}, {GraphClass::DAG, "DAG"}, {GraphClass::CG, "CG"},
        {GraphClass::CMG, "CMG"}, {GraphClass::AnG, "AnG"},
    };
    std::string out;
    for (auto [flag, name] : names) {
        if (!contains(flags, flag)) continue;
        if (!out.empty()) out += ' ';
        out += name;
    }
    return out;
}

void require_cmg(const MixedGraph& g) {
    if (!is_cmg(g)) throw Error(Errc::NotACMG, "graph has a semi-directed cycle with an arrow");
}

void require_chain_graph(const MixedGraph& g) {
    if (!is_chain_graph(g)) throw Error(Errc::NotAChainGraph, "graph is not a chain graph");
}

void require_anterial(const MixedGraph& g) {
    if (!is_anterial(g)) throw Error(Errc::NotAnAnG, "graph is not an anterial graph");
}

// ---------------------------------------------------------------------------
// Components, reachability, subgraphs

NodeSet line_reach(const std::vector<NodeSet>& lines, NodeIndex v, NodeSet blocked) {
    NodeSet seen = NodeSet::single(v);
    NodeSet frontier = seen;
    while (!frontier.empty()) {
        NodeSet next;
        for (NodeIndex u : frontier) next |= lines[u];
        next -= seen;
        next -= blocked;
        seen |= next;
        frontier = next;
    }
    return seen;
}

NodeSet line_reachable(const MixedGraph& g, NodeIndex v, NodeSet blocked) {
    if (v >= g.size()) throw Error(Errc::UnknownNode, "line_reachable: node index out of range");
    if (blocked.contains(v)) throw Error(Errc::BlockedStart, "line_reachable: start node '" + g.label(v) + "' is blocked");
    return line_reach(g.adjacency().line, v, blocked);
}

std::vector<NodeSet> chain_components(const MixedGraph& g) {
    require_chain_graph(g);
    std::vector<NodeSet> out;
    NodeSet left = g.all();
    while (!left.empty()) {
        NodeSet comp = line_reach(g.adjacency().line, left.front(), {});
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

MixedGraph induced_subgraph(const MixedGraph& g, NodeSet a) {
    if (!a.subset_of(g.all())) throw Error(Errc::UnknownNode, "induced_subgraph: node set not in graph");
    std::vector<NodeIndex> keep(a.begin(), a.end());
    std::vector<NodeIndex> remap(g.size(), 0);
    for (std::size_t k = 0; k < keep.size(); ++k) remap[keep[k]] = k;
    auto map_set = [&](NodeSet s) {
        NodeSet out;
        for (NodeIndex x : s & a) out.insert(remap[x]);
        return out;
    };
    Adjacency adj(keep.size());
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const NodeIndex v = keep[k];
        labels.push_back(g.label(v));
        adj.line[k] = map_set(g.adjacency().line[v]);
        adj.arc[k] = map_set(g.adjacency().arc[v]);
        adj.children[k] = map_set(g.adjacency().children[v]);
        adj.parents[k] = map_set(g.adjacency().parents[v]);
    }
    return MixedGraph::from_adjacency(std::move(labels), std::move(adj));
}

MixedGraph moral_graph(const MixedGraph& g) {
    const auto components = chain_components(g);
    Adjacency adj(g.size());
    for (const Edge& e : g.edges()) adj.add(Edge::line(e.from, e.to));
    for (NodeSet comp : components) {
        NodeSet parents;
        for (NodeIndex v : comp) parents |= g.pa(v);
        for (NodeIndex p : parents)
            for (NodeIndex q : parents)
                if (p < q) adj.add(Edge::line(p, q));
    }
    return MixedGraph::from_adjacency(g.labels(), std::move(adj));
}

NodeSet translate(const MixedGraph& from, NodeSet s, const MixedGraph& to) {
    NodeSet out;
    for (NodeIndex i : s)
        if (auto j = to.find(from.label(i))) out.insert(*j);
    return out;
}

}  // namespace cmg
