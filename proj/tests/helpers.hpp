#ifndef CMG_TEST_HELPERS_HPP
#define CMG_TEST_HELPERS_HPP

#include <string>

#include "cmg/graph_file.hpp"

namespace cmg::test {

// "a -> b; b -- c" style one-liners for fixtures.
inline MixedGraph g(std::string text) {
    for (char& ch : text)
        if (ch == ';') ch = '\n';
    return parse_graph(text);
}

inline std::string canon(const MixedGraph& h) {
    std::string s = render_graph(h);
    for (char& ch : s)
        if (ch == '\n') ch = ';';
    return s;
}

}  // namespace cmg::test

#endif
