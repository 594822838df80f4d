#include "cmg/walk.hpp"

#include <algorithm>
#include <deque>

namespace cmg {

Walk Walk::reversed() const {
    Walk r;
    r.nodes.assign(nodes.rbegin(), nodes.rend());
    r.edges.assign(edges.rbegin(), edges.rend());
    return r;
}

bool is_valid_walk(const MixedGraph& g, const Walk& w) {
    if (w.nodes.empty() || w.nodes.size() != w.edges.size() + 1) return false;
    for (NodeIndex v : w.nodes)
        if (v >= g.size()) return false;
    for (std::size_t k = 0; k < w.edges.size(); ++k) {
        const Edge& e = w.edges[k];
        if (!g.has(e)) return false;
        const NodeIndex a = w.nodes[k], b = w.nodes[k + 1];
        if (!(e.touches(a) && e.other(a) == b)) return false;
    }
    return true;
}

std::vector<Section> sections(const Walk& w) {
    std::vector<Section> out;
    const std::size_t n = w.nodes.size();
    std::size_t start = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const bool run_ends = k + 1 == n || w.edges[k].type != EdgeType::Line;
        if (!run_ends) continue;
        Section s{start, k, SectionKind::NonCollider};
        if (start == 0 || k + 1 == n) {
            s.kind = SectionKind::Endpoint;
        } else if (has_head_at(w.edges[start - 1], w.nodes[start]) && has_head_at(w.edges[k], w.nodes[k])) {
            s.kind = SectionKind::Collider;
        }
        out.push_back(s);
        start = k + 1;
    }
    return out;
}

NodeSet section_nodes(const Walk& w, const Section& s) {
    NodeSet out;
    for (std::size_t k = s.first; k <= s.last; ++k) out.insert(w.nodes[k]);
    return out;
}

bool is_c_connecting(const Walk& w, NodeSet c) {
    if (w.nodes.empty()) return false;
    for (const Section& s : sections(w)) {
        const bool meets = section_nodes(w, s).intersects(c);
        if (s.kind == SectionKind::Collider ? !meets : meets) return false;
    }
    return true;
}

std::string render(const MixedGraph& g, const Walk& w) {
    std::string out;
    for (std::size_t k = 0; k < w.nodes.size(); ++k) {
        if (k > 0) {
            const Edge& e = w.edges[k - 1];
            const NodeIndex prev = w.nodes[k - 1];
            switch (e.type) {
                case EdgeType::Line: out += " -- "; break;
                case EdgeType::Arc: out += " <-> "; break;
                case EdgeType::Arrow: out += e.from == prev ? " -> " : " <- "; break;
            }
        }
        out += g.label(w.nodes[k]);
    }
    return out;
}

std::optional<Walk> line_path(const Adjacency& adj, NodeIndex from, NodeIndex to, NodeSet blocked) {
    if (blocked.contains(from) || blocked.contains(to)) return std::nullopt;
    std::vector<NodeIndex> parent(adj.size(), adj.size());
    NodeSet seen = NodeSet::single(from);
    std::deque<NodeIndex> queue{from};
    while (!queue.empty() && !seen.contains(to)) {
        NodeIndex v = queue.front();
        queue.pop_front();
        for (NodeIndex u : adj.line[v] - seen - blocked) {
            seen.insert(u);
            parent[u] = v;
            queue.push_back(u);
        }
    }
    if (!seen.contains(to)) return std::nullopt;
    std::vector<NodeIndex> chain{to};
    while (chain.back() != from) chain.push_back(parent[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    Walk w{{from}, {}};
    for (std::size_t k = 1; k < chain.size(); ++k) w.push(Edge::line(chain[k - 1], chain[k]));
    return w;
}

}  // namespace cmg
