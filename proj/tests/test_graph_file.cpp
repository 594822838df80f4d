#include <doctest.h>

#include "cmg/error.hpp"
#include "cmg/graph_file.hpp"
#include "cmg/propcheck.hpp"

using namespace cmg;

TEST_CASE("parse the plain-text format") {
    const auto h = parse_graph(
        "# comment\n"
        "nodes: z\n"
        "a -- b   # trailing\n"
        "\n"
        "b -> c\n"
        "d <- c\n"
        "c <-> a\n");
    CHECK(h.labels() == std::vector<std::string>{"a", "b", "c", "d", "z"});
    CHECK(h.has_line(h.index("a"), h.index("b")));
    CHECK(h.has_arrow(h.index("b"), h.index("c")));
    CHECK(h.has_arrow(h.index("c"), h.index("d")));
    CHECK(h.has_arc(h.index("a"), h.index("c")));
    CHECK(h.edge_count() == 4);
}

TEST_CASE("canonical rendering") {
    const auto h = parse_graph("c <-> a\nb -> c\nb -- a\nnodes: e\n");
    CHECK(render_graph(h) == "nodes: a b c e\na -- b\nb -> c\na <-> c\n");
    CHECK(parse_graph(render_graph(h)) == h);
    CHECK(render_graph(parse_graph("")) == "nodes:\n");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("a -- b\n\na -- a\n");
        FAIL("expected a loop error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LoopEdge);
        CHECK(std::string(e.what()) == "line 3: loop edge at node 'a'");
    }
    for (const char* bad : {"a ~ b", "a --", "-- b", "a -- b c", "a -> b -> c"}) {
        try {
            parse_graph(bad);
            FAIL("expected a parse error for: " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Parse);
            CHECK(std::string(e.what()).rfind("line 1: ", 0) == 0);
        }
    }
}

TEST_CASE("dot export") {
    const auto h = parse_graph("a -- b\nb -> c\nc <-> a\n");
    CHECK(to_dot(h) ==
          "digraph G {\n"
          "  \"a\";\n  \"b\";\n  \"c\";\n"
          "  \"a\" -> \"b\" [dir=none];\n"
          "  \"b\" -> \"c\";\n"
          "  \"a\" -> \"c\" [dir=both];\n"
          "}\n");
}

TEST_CASE("label lists") {
    CHECK(split_labels("") == std::vector<std::string>{});
    CHECK(split_labels("a,b c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_labels(" x ,, y ") == std::vector<std::string>{"x", "y"});
}

TEST_CASE("round trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        for (GraphKind kind : {GraphKind::CG, GraphKind::CMG, GraphKind::AnG}) {
            const auto h = random_graph({2 + seed % 7, 0.6, seed, kind});
            const std::string text = render_graph(h);
            const auto back = parse_graph(text);
            CHECK(back == h);
            CHECK(render_graph(back) == text);
        }
    }
}
