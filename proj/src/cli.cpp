#include "cmg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cmg/error.hpp"
#include "cmg/graph_file.hpp"
#include "cmg/propcheck.hpp"
#include "cmg/separation.hpp"
#include "cmg/transform.hpp"

namespace cmg::cli {

namespace {

MixedGraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_graph(text.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

NodeSet node_list(const MixedGraph& g, const std::string& text) { return g.nodes(split_labels(text)); }

int exit_for(Errc code) { return code == Errc::TooLarge ? exit_too_large : exit_usage; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chain graphs, chain mixed graphs and anterial graphs"};
    app.name("cmg");
    app.require_subcommand(1);

    std::string file, file2, a_list, b_list, given, m_list, c_list, method = "c", order = "mc", suite = "all";
    bool ang = false;
    std::uint64_t seed = 1;
    std::size_t count = 500, cap = default_model_cap;

    auto* classify_cmd = app.add_subcommand("classify", "Print the classes a graph belongs to");
    classify_cmd->add_option("file", file, "Graph file")->required();

    auto* separate_cmd = app.add_subcommand("separate", "Decide a separation statement");
    separate_cmd->add_option("file", file, "Graph file")->required();
    separate_cmd->add_option("--a", a_list, "First node set")->required();
    separate_cmd->add_option("--b", b_list, "Second node set")->required();
    separate_cmd->add_option("--given", given, "Conditioning set");
    separate_cmd->add_option("--method", method, "c, moral, or oracle")
        ->check(CLI::IsMember({"c", "moral", "oracle"}));

    auto* transform_cmd = app.add_subcommand("transform", "Marginalize and condition a graph");
    transform_cmd->add_option("file", file, "Graph file")->required();
    transform_cmd->add_option("-M", m_list, "Nodes to marginalize over");
    transform_cmd->add_option("-C", c_list, "Nodes to condition on");
    transform_cmd->add_flag("--ang", ang, "Produce an anterial graph");
    transform_cmd->add_option("--order", order, "mc (marginalize first) or cm")
        ->check(CLI::IsMember({"mc", "cm"}));

    auto* model_cmd = app.add_subcommand("model", "List the pairwise independence model");
    model_cmd->add_option("file", file, "Graph file")->required();
    model_cmd->add_option("--cap", cap, "Largest graph to enumerate");

    auto* equal_cmd = app.add_subcommand("equal", "Compare the models of two graphs");
    equal_cmd->add_option("file", file, "Graph file")->required();
    equal_cmd->add_option("other", file2, "Graph file")->required();

    auto* check_cmd = app.add_subcommand("check", "Run property suites");
    check_cmd->add_option("--suite", suite, "Suite id or 'all'");
    check_cmd->add_option("--seed", seed, "Base seed");
    check_cmd->add_option("--count", count, "Instances per suite");

    auto* dot_cmd = app.add_subcommand("dot", "Export Graphviz");
    dot_cmd->add_option("file", file, "Graph file")->required();

    auto* demo_cmd = app.add_subcommand("demo", "Show a DAG marginal that no chain graph represents");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*classify_cmd) {
            const std::string flags = to_string(classify(load(file)));
            out << (flags.empty() ? "none" : flags) << '\n';
            return exit_ok;
        }
        if (*separate_cmd) {
            const MixedGraph g = load(file);
            const SeparationQuery q{node_list(g, a_list), node_list(g, b_list), node_list(g, given)};
            bool separated;
            if (method == "moral") separated = moral_separated(g, q);
            else if (method == "oracle") separated = bounded_walk_oracle(g, q, OracleMode::WalksInC);
            else separated = c_separated(g, q);
            out << (separated ? "separated" : "connected") << '\n';
            if (!separated && method == "c") {
                if (auto walk = c_connecting_witness(g, q)) out << "walk: " << render(g, *walk) << '\n';
            }
            return exit_ok;
        }
        if (*transform_cmd) {
            const MixedGraph g = load(file);
            const TransformSpec spec{node_list(g, m_list), node_list(g, c_list)};
            validate(g, spec);
            const MixedGraph h = ang ? ang_transform(g, spec)
                                     : marginalize_and_condition(
                                           g, spec, order == "cm" ? Order::ConditionFirst : Order::MarginalizeFirst);
            out << render_graph(h);
            return exit_ok;
        }
        if (*model_cmd) {
            for (const auto& line : pairwise_model(load(file), cap).lines()) out << line << '\n';
            return exit_ok;
        }
        if (*equal_cmd) {
            const bool same = models_equal(pairwise_model(load(file)), pairwise_model(load(file2)));
            out << (same ? "equal" : "different") << '\n';
            return exit_ok;
        }
        if (*check_cmd) {
            std::vector<std::string> ids;
            if (suite == "all") ids = suite_ids();
            else ids = split_labels(suite);
            bool failed = false;
            for (const auto& id : ids) {
                const PropertyReport report = run_suite(id, seed, count);
                out << report.to_line() << '\n';
                failed |= report.failures > 0;
            }
            return failed ? exit_property_failure : exit_ok;
        }
        if (*dot_cmd) {
            out << to_dot(load(file));
            return exit_ok;
        }
        if (*demo_cmd) {
            const DemoResult demo = cg_unrepresentability_demo();
            std::string dag = render_graph(demo.dag);
            std::replace(dag.begin(), dag.end(), '\n', ';');
            out << "dag: " << dag << '\n';
            out << "marginalized: " << demo.dag.labels_of(demo.marginalized).front() << '\n';
            out << demo.report.to_line() << '\n';
            return demo.report.failures ? exit_property_failure : exit_ok;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return exit_for(e.code());
    }
    return exit_usage;
}

}  // namespace cmg::cli
