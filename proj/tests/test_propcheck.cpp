#include <doctest.h>

#include "cmg/error.hpp"
#include "cmg/graph_file.hpp"
#include "cmg/propcheck.hpp"

using namespace cmg;

TEST_CASE("random graphs are deterministic and in class") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const GeneratorConfig cg{6, 0.5, seed, GraphKind::CG};
        const auto a = random_graph(cg);
        CHECK(a == random_graph(cg));
        CHECK(is_chain_graph(a));
        CHECK(is_cmg(random_graph({6, 0.5, seed, GraphKind::CMG})));
        CHECK(is_anterial(random_graph({6, 0.5, seed, GraphKind::AnG})));
    }
    CHECK(random_graph({2, 0.0, 3, GraphKind::CMG}).edge_count() == 0);
    CHECK(random_graph({4, 0.5, 1, GraphKind::CMG}).labels() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("random graph configs are validated") {
    for (const GeneratorConfig bad : {GeneratorConfig{1, 0.5, 0, GraphKind::CG},
                                      GeneratorConfig{9, 0.5, 0, GraphKind::CG},
                                      GeneratorConfig{4, -0.1, 0, GraphKind::CG},
                                      GeneratorConfig{4, 1.5, 0, GraphKind::CG}}) {
        try {
            random_graph(bad);
            FAIL("expected InvalidConfig");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InvalidConfig);
        }
    }
}

TEST_CASE("exhaustive enumeration counts") {
    // 4 options per pair for chain graphs: none, line, two arrows; minus cyclic ones
    std::size_t cgs = 0;
    CHECK(for_each_graph({"a", "b"}, GraphKind::CG, [&](const MixedGraph& h) {
              CHECK(is_chain_graph(h));
              ++cgs;
          }) == 4);
    CHECK(cgs == 4);
    const std::size_t cmgs = for_each_graph({"a", "b"}, GraphKind::CMG, [](const MixedGraph& h) { CHECK(is_cmg(h)); });
    // subsets of {line, a->b, b->a, arc} that stay CMGs: no line with an arrow, not both arrows
    CHECK(cmgs == 8);
}

TEST_CASE("report lines") {
    PropertyReport r{"x", 3, 0, 1, std::nullopt};
    CHECK(r.to_line() == "property=x instances=3 failures=0 skipped=1");
    r.failures = 1;
    r.counterexample = "say \"hi\"";
    CHECK(r.to_line() == "property=x instances=3 failures=1 skipped=1 counterexample=\"say \\\"hi\\\"\"");
}

TEST_CASE("model preservation on a small chain") {
    // a -> m -> b with m marginalized
    const auto h = parse_graph("a -> m\nm -> b\n");
    CHECK(check_marginalization({h, h.nodes({"m"}), {}, {}, {}}).verdict == Verdict::Pass);
    CHECK(check_conditioning({h, {}, h.nodes({"m"}), {}, {}}).verdict == Verdict::Pass);
    CHECK(check_combined({h, {}, {}, {}, {}}).verdict == Verdict::Pass);
    CHECK(check_composition_marginalization({h, h.nodes({"m"}), {}, {}, {}}).verdict == Verdict::Pass);
}

TEST_CASE("commutativity distinguishes graphs from models") {
    // maximal after marginalizing: graph equality is checked
    const auto h = parse_graph("m -> i\nm -> j\nj -> c\ni -> c\n");
    const Instance inst{h, h.nodes({"m"}), h.nodes({"c"}), {}, {}};
    CHECK(check_commutativity_graph(inst).verdict == Verdict::Pass);
    CHECK(check_commutativity_model(inst).verdict == Verdict::Pass);
}

TEST_CASE("shrinking keeps the failure") {
    // fails whenever node d is present
    const Check needs_d = [](const Instance& inst) {
        return inst.g.find("d") ? Outcome::fail("d present") : Outcome::pass();
    };
    const auto h = parse_graph("a -> b\nb -- c\nc <-> d\nd -> e\n");
    const Instance small = shrink({h, {}, {}, {}, {}}, needs_d);
    CHECK(small.g.labels() == std::vector<std::string>{"d"});
    CHECK(describe(small) == "nodes: d | M={} C={}");
}

TEST_CASE("suites are reproducible") {
    for (const auto& id : {"separation-oracle", "marginalization", "closure-condition-cg"}) {
        const auto a = run_suite(id, 7, 40);
        const auto b = run_suite(id, 7, 40);
        CHECK(a.to_line() == b.to_line());
        CHECK(a.instances == 40);
    }
    CHECK(instance_seed(0, 5) == 5);
    CHECK(instance_seed(1, 0) != instance_seed(2, 0));
    CHECK_THROWS_AS(run_suite("no-such-suite", 1, 1), Error);
    CHECK(suite_ids().size() > 20);
}

TEST_CASE("chain graphs are not closed under marginalization") {
    const DemoResult demo = cg_unrepresentability_demo();
    CHECK(demo.report.failures == 0);
    CHECK(demo.dag.size() == 5);
    CHECK(demo.marginalized.size() == 1);
    CHECK(demo.chain_graphs > 0);
    CHECK(contains(classify(demo.dag), GraphClass::DAG));
}
