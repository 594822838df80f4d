#include <doctest.h>

#include <sstream>

#include "cmg/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cmg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CMG_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("classify") {
    CHECK(run({"classify", data("chain.graph")}).out == "CG CMG AnG\n");
    CHECK(run({"classify", data("anterial.graph")}).out == "CMG AnG\n");
    const auto loop = run({"classify", data("loop.graph")});
    CHECK(loop.code == cmg::cli::exit_usage);
    CHECK(loop.err.find("LoopEdge") != std::string::npos);
    CHECK(loop.err.find("line 2") != std::string::npos);
    CHECK(run({"classify", data("missing.graph")}).code == cmg::cli::exit_usage);
}

TEST_CASE("separate") {
    const auto r = run({"separate", data("gex.graph"), "--a", "j", "--b", "h", "--given", "l"});
    CHECK(r.code == 0);
    CHECK(r.out == "connected\nwalk: j -> k -> l -- r <- q -> h\n");
    CHECK(run({"separate", data("gex.graph"), "--a", "j", "--b", "h", "--given", "l", "--method", "moral"}).out ==
          "connected\n");
    CHECK(run({"separate", data("split.graph"), "--a", "a", "--b", "d"}).out == "separated\n");
    for (const char* given : {"", "b", "c", "b,c"}) {
        const auto c = run({"separate", data("mixed4.graph"), "--a", "a", "--b", "c", "--given", given});
        const auto o = run({"separate", data("mixed4.graph"), "--a", "a", "--b", "c", "--given", given, "--method",
                            "oracle"});
        CHECK(c.out.substr(0, o.out.size()) == o.out);
    }
    CHECK(run({"separate", data("gex.graph"), "--a", "j", "--b", "j"}).code == cmg::cli::exit_usage);
    const auto moral = run({"separate", data("anterial.graph"), "--a", "a", "--b", "c", "--method", "moral"});
    CHECK(moral.code == cmg::cli::exit_usage);
    CHECK(moral.err.find("NotAChainGraph") != std::string::npos);
}

TEST_CASE("transform") {
    const auto echo = run({"transform", data("mixed4.graph"), "-M", "", "-C", ""});
    CHECK(echo.out == "nodes: a b c d\nb -- c\na -> b\na <-> d\nc <-> d\n");
    CHECK(run({"transform", data("marginal_row1.graph"), "-M", "m"}).out == "nodes: i j\nj -> i\n");
    const auto ang = run({"transform", data("chain.graph"), "-C", "c", "--ang"});
    CHECK(ang.code == 0);
    CHECK(run({"transform", data("gex.graph"), "-M", "k", "-C", "k"}).code == cmg::cli::exit_usage);
    CHECK(run({"transform", data("gex.graph"), "--order", "xy"}).code == cmg::cli::exit_usage);
    CHECK(run({"transform", data("gex.graph"), "-M", "k", "--order", "cm"}).code == 0);
}

TEST_CASE("model and equal") {
    CHECK(run({"model", data("pair.graph")}).out == "a ⊥ b | {}\n");
    CHECK(run({"equal", data("gex.graph"), data("gex.graph")}).out == "equal\n");
    CHECK(run({"equal", data("chain.graph"), data("anterial.graph")}).out == "different\n");
    const auto big = run({"model", data("nine.graph")});
    CHECK(big.code == cmg::cli::exit_too_large);
    CHECK(run({"model", data("nine.graph"), "--cap", "9"}).code == 0);
}

TEST_CASE("check and dot") {
    const auto r = run({"check", "--suite", "marginalization", "--seed", "7", "--count", "20"});
    CHECK(r.out.rfind("property=marginalization instances=20 ", 0) == 0);
    CHECK(run({"check", "--suite", "nope"}).code == cmg::cli::exit_usage);
    CHECK(run({"dot", data("marginal_row1.graph")}).out.find("\"j\" -> \"m\";") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cmg::cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cmg::cli::exit_usage);
    CHECK(run({"separate", data("gex.graph")}).code == cmg::cli::exit_usage);
    CHECK(run({"--help"}).code == 0);
}
