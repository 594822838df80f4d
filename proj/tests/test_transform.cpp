#include <doctest.h>

#include "cmg/error.hpp"
#include "cmg/propcheck.hpp"
#include "cmg/separation.hpp"
#include "cmg/transform.hpp"
#include "helpers.hpp"

using namespace cmg;
using cmg::test::canon;
using cmg::test::g;

namespace {

std::string marg(const char* text, std::initializer_list<std::string_view> m) {
    const auto h = g(text);
    return canon(marginalize(h, h.nodes(m)));
}

std::string cond(const char* text, std::initializer_list<std::string_view> c) {
    const auto h = g(text);
    return canon(condition(h, h.nodes(c)));
}

}  // namespace

// Marginalization table, one minimal graph per row.

TEST_CASE("marginalize row 1: i <- m <- j gives i <- j") {
    CHECK(marg("j -> m; m -> i", {"m"}) == "nodes: i j;j -> i;");
}
TEST_CASE("marginalize row 2: i <- m -- j gives i <- j") {
    CHECK(marg("m -> i; m -- j", {"m"}) == "nodes: i j;j -> i;");
}
TEST_CASE("marginalize row 3: i <-> m -- j gives i <-> j") {
    CHECK(marg("i <-> m; m -- j", {"m"}) == "nodes: i j;i <-> j;");
}
TEST_CASE("marginalize row 4: i <- m -> j gives i <-> j") {
    CHECK(marg("m -> i; m -> j", {"m"}) == "nodes: i j;i <-> j;");
}
TEST_CASE("marginalize row 5: i <- m <-> j gives i <-> j") {
    CHECK(marg("m -> i; m <-> j", {"m"}) == "nodes: i j;i <-> j;");
}
TEST_CASE("marginalize row 6: i -- m <- j gives i <- j") {
    CHECK(marg("i -- m; j -> m", {"m"}) == "nodes: i j;j -> i;");
}
TEST_CASE("marginalize row 7: i -- m -- j gives i -- j") {
    CHECK(marg("i -- m; m -- j", {"m"}) == "nodes: i j;i -- j;");
}
TEST_CASE("marginalize row 8: m -> i -- o <- j gives i <- j") {
    CHECK(marg("m -> i; i -- o; j -> o", {"m"}) == "nodes: i j o;i -- o;j -> i;j -> o;");
}
TEST_CASE("marginalize row 9: m -> i -- o <-> j gives i <-> j") {
    CHECK(marg("m -> i; i -- o; o <-> j", {"m"}) == "nodes: i j o;i -- o;i <-> j;j <-> o;");
}

// Conditioning table.

TEST_CASE("condition row 1: i -> s <- j gives i -- j") {
    CHECK(cond("i -> s; j -> s", {"s"}) == "nodes: i j;i -- j;");
}
TEST_CASE("condition row 2: i <-> s <- j gives i <- j") {
    CHECK(cond("i <-> s; j -> s", {"s"}) == "nodes: i j;j -> i;");
}
TEST_CASE("condition row 3: i <-> s <-> j gives i <-> j") {
    CHECK(cond("i <-> s; s <-> j", {"s"}) == "nodes: i j;i <-> j;");
}
TEST_CASE("condition row 4: s <-> i -- o <- j gives i <- j") {
    CHECK(cond("s <-> i; i -- o; j -> o", {"s"}) == "nodes: i j o;i -- o;j -> i;j -> o;");
}
TEST_CASE("condition row 5: s <-> i -- o <-> j gives i <-> j") {
    CHECK(cond("s <-> i; i -- o; o <-> j", {"s"}) == "nodes: i j o;i -- o;i <-> j;j <-> o;");
}

TEST_CASE("conditioning sections run through anteriors of C") {
    // s -- t with t in C puts s in S; the arrowhead at s is dropped
    CHECK(cond("i -> s; s -- t; j -> t", {"t"}) == "nodes: i j s;i -- j;i -- s;");
    const auto h = g("a -> s; b -> s; b -> t; c -> t");
    const auto out = condition(h, h.nodes({"s", "t"}));
    CHECK(canon(out) == "nodes: a b c;a -- b;b -- c;");
}

TEST_CASE("arrowheads at S are removed") {
    // a -> b -> c, condition on c: b and a are anterior
    CHECK(cond("a -> b; b -> c", {"c"}) == "nodes: a b;a -- b;");
    // arc into S becomes an arrow out of S
    CHECK(cond("a <-> b; b -> c", {"c"}) == "nodes: a b;b -> a;");
}

TEST_CASE("identities") {
    const auto h = g("a -> b; b -- c; c <-> d; a <-> d");
    CHECK(marginalize(h, {}) == h);
    CHECK(condition(h, {}) == h);
    CHECK(marginalize_and_condition(h, {}) == h);
    const auto ang = g("a -> b; b -- c; c <-> d");
    REQUIRE(is_anterial(ang));
    CHECK(anterialize(ang) == ang);
    CHECK(ang_transform(ang, {}) == ang);
}

TEST_CASE("combined transform orders") {
    const auto h = g("m -> i; m -> j; j -> c; i -> c");
    const TransformSpec spec{h.nodes({"m"}), h.nodes({"c"})};
    CHECK(marginalize_and_condition(h, {spec.m, {}}) == marginalize(h, spec.m));
    const auto mc = marginalize_and_condition(h, spec);
    const auto cm = marginalize_and_condition(h, spec, Order::ConditionFirst);
    CHECK(canon(mc) == "nodes: i j;i -- j;");
    CHECK(models_equal(pairwise_model(mc), pairwise_model(cm)));
    CHECK_THROWS_AS(validate(h, TransformSpec{h.nodes({"m"}), h.nodes({"m"})}), Error);
}

TEST_CASE("anterialize") {
    CHECK(canon(anterialize(g("a <-> b; a -> b"))) == "nodes: a b;a -> b;");
    CHECK(canon(anterialize(g("a <-> b; a -- b"))) == "nodes: a b;a -- b;");
    // a -> x -> b with a <-> b: the arc becomes an arrow
    CHECK(canon(anterialize(g("a -> x; x -> b; a <-> b"))) == "nodes: a b x;a -> b;a -> x;x -> b;");
    const auto out = anterialize(g("k <-> i; i -- j; j <-> l; k -> j"));
    CHECK(is_anterial(out));
    CHECK(out.is_simple());
}

TEST_CASE("class H") {
    CHECK(in_class_H(g("a -> b; b -- c; d -> c")));
    CHECK_FALSE(in_class_H(g("k <-> i; i -- j; l -> j")));
    CHECK(in_class_H(g("k <-> i; i -- j; l -> j; l -> i")));
    CHECK_FALSE(in_class_H(g("k <-> i; i -- j; j <-> l")));
    CHECK(in_class_H(g("k <-> i; i -- j; j <-> l; k <-> j; i <-> l; i <-> j")));
    CHECK_THROWS_AS(in_class_H(g("a -> b; b -> a")), Error);
}

TEST_CASE("class K") {
    CHECK(in_class_K(g("a -> b; b -- c; d -> c")));
    CHECK_FALSE(in_class_K(g("k <-> i; i -- j; j <-> l")));
    CHECK(in_class_K(g("k <-> i; i -- j; j <-> l; j <-> k; i <-> l")));
    CHECK_FALSE(in_class_K(g("k <-> i; i -- j; l -> j")));
    try {
        in_class_K(g("a -> b; a <-> b"));
        FAIL("expected NotAnAnG");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAnAnG);
    }
}

TEST_CASE("class membership on random chain graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto cg = random_graph({6, 0.5, seed, GraphKind::CG});
        const NodeSet m = NodeSet(seed % 64) & cg.all();
        const auto h = marginalize(cg, m);
        CHECK(in_class_H(h));
        CHECK(in_class_K(ang_transform(cg, {m, {}})));
        CHECK(is_chain_graph(condition(cg, m)));
    }
}

TEST_CASE("marginal edge oracle") {
    const auto h = g("m -> i; m -- j");
    const NodeIndex i = h.index("i"), j = h.index("j");
    CHECK(marginal_edge_oracle(h, h.nodes({"m"}), i, j));
    CHECK(marginal_edge_kinds(h, h.nodes({"m"}), i, j) == HeadPatterns{{true, false}});
    CHECK_FALSE(marginal_edge_oracle(g("nodes: i j"), {}, 0, 1));
    // a collider at m yields nothing
    const auto col = g("i -> m; j -> m");
    CHECK_FALSE(marginal_edge_oracle(col, col.nodes({"m"}), col.index("i"), col.index("j")));
}

TEST_CASE("conditional edge oracle") {
    const auto h = g("i <-> s; s <-> j");
    const NodeIndex i = h.index("i"), j = h.index("j");
    CHECK(conditional_edge_oracle(h, h.nodes({"s"}), i, j));
    CHECK(conditional_edge_kinds(h, h.nodes({"s"}), i, j) == HeadPatterns{{true, true}});
    CHECK_FALSE(conditional_edge_oracle(h, {}, i, j));
    // grown endpoint section through a spouse of S
    const auto r4 = g("s <-> i; i -- o; j -> o");
    CHECK(conditional_edge_kinds(r4, r4.nodes({"s"}), r4.index("i"), r4.index("j")) ==
          HeadPatterns{{true, false}});
}

TEST_CASE("subprimitive walks") {
    const auto arc = g("i <-> j");
    CHECK(subprimitive_walk_exists(arc, 1, 0));
    CHECK(subprimitive_walk_kinds(arc, 1, 0) == HeadPatterns{{true, true}});
    CHECK_FALSE(subprimitive_walk_exists(g("nodes: i j"), 1, 0));
    // j <-> k -- x <-> i with the section anterior to i
    const auto h = g("j <-> k; k -- x; x <-> i; x -> i");
    const NodeIndex i = h.index("i"), j = h.index("j");
    CHECK(subprimitive_walk_exists(h, j, i));
    CHECK(anterialize(h).adjacent(i, j));
}

TEST_CASE("edge oracles agree with the transforms on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto h = random_graph({5, 0.5, seed, GraphKind::CMG});
        const NodeSet m = NodeSet{0, 2} & h.all();
        const NodeSet c = NodeSet{1} & h.all();
        const auto marg_out = marginalize(h, m);
        const auto cond_out = condition(h, c);
        for (NodeIndex i = 0; i < h.size(); ++i)
            for (NodeIndex j = i + 1; j < h.size(); ++j) {
                if (!m.contains(i) && !m.contains(j)) {
                    const NodeIndex a = marg_out.index(h.label(i)), b = marg_out.index(h.label(j));
                    CHECK(marginal_edge_kinds(h, m, i, j) == edge_patterns(marg_out, a, b));
                }
                if (!c.contains(i) && !c.contains(j)) {
                    const NodeIndex a = cond_out.index(h.label(i)), b = cond_out.index(h.label(j));
                    CHECK(conditional_edge_oracle(h, c, i, j) == cond_out.adjacent(a, b));
                }
            }
    }
}
