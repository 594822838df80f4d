#include "cmg/graph_file.hpp"

#include <sstream>

#include "cmg/error.hpp"

namespace cmg {

namespace {

bool is_label_char(char ch) {
    return !(ch == ' ' || ch == '\t' || ch == '\r' || ch == ',' || ch == '#' || ch == '<' || ch == '>' || ch == '-' ||
             ch == ':');
}

std::string_view trim(std::string_view s) {
    const auto space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

// Reads one label at the front of `s`; empty when none.
std::string_view take_label(std::string_view& s) {
    std::size_t n = 0;
    while (n < s.size() && is_label_char(s[n])) ++n;
    std::string_view out = s.substr(0, n);
    s.remove_prefix(n);
    s = trim(s);
    return out;
}

}  // namespace

std::vector<std::string> split_labels(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

MixedGraph parse_graph(std::string_view text) {
    std::vector<std::string> nodes;
    std::vector<LabeledEdge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("nodes:", 0) == 0) {
            for (auto& label : split_labels(line.substr(6))) {
                for (char ch : label)
                    if (!is_label_char(ch)) fail(line_no, "bad node label '" + label + "'");
                nodes.push_back(label);
            }
            continue;
        }

        std::string_view rest = line;
        const std::string left{take_label(rest)};
        if (left.empty()) fail(line_no, "expected a node label");
        EdgeType type;
        bool reversed = false;
        if (rest.rfind("<->", 0) == 0) {
            type = EdgeType::Arc;
            rest.remove_prefix(3);
        } else if (rest.rfind("--", 0) == 0) {
            type = EdgeType::Line;
            rest.remove_prefix(2);
        } else if (rest.rfind("->", 0) == 0) {
            type = EdgeType::Arrow;
            rest.remove_prefix(2);
        } else if (rest.rfind("<-", 0) == 0) {
            type = EdgeType::Arrow;
            reversed = true;
            rest.remove_prefix(2);
        } else {
            fail(line_no, "expected one of '--', '->', '<-', '<->' after '" + left + "'");
        }
        rest = trim(rest);
        const std::string right{take_label(rest)};
        if (right.empty()) fail(line_no, "expected a node label after the edge");
        if (!rest.empty()) fail(line_no, "unexpected text '" + std::string(rest) + "'");
        if (left == right)
            throw Error(Errc::LoopEdge, "line " + std::to_string(line_no) + ": loop edge at node '" + left + "'");
        nodes.push_back(left);
        nodes.push_back(right);
        edges.push_back(reversed ? LabeledEdge{right, left, type} : LabeledEdge{left, right, type});
    }
    return MixedGraph::build(std::move(nodes), edges);
}

std::string render_graph(const MixedGraph& g) {
    std::string out = "nodes:";
    for (const auto& l : g.labels()) out += " " + l;
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += g.label(e.from);
        out += ' ';
        out += to_string(e.type);
        out += ' ';
        out += g.label(e.to);
        out += '\n';
    }
    return out;
}

std::string to_dot(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (const auto& l : g.labels()) out << "  \"" << l << "\";\n";
    for (const Edge& e : g.edges()) {
        out << "  \"" << g.label(e.from) << "\" -> \"" << g.label(e.to) << "\"";
        if (e.type == EdgeType::Line) out << " [dir=none]";
        if (e.type == EdgeType::Arc) out << " [dir=both]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cmg
