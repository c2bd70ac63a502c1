/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/formats.hh>
#include <homred/gadgets.hh>
#include <homred/graph.hh>
#include <homred/pipeline.hh>
#include <homred/random_graph.hh>
#include <homred/reductions.hh>
#include <homred/solvers.hh>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace homred;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr int exit_yes = 0;
    constexpr int exit_no = 1;
    constexpr int exit_error = 2;

    auto exit_code(Decision d) -> int
    {
        switch (d) {
            case Decision::yes:     return exit_yes;
            case Decision::no:      return exit_no;
            case Decision::timeout: return exit_error;
        }
        return exit_error;
    }

    struct BudgetArgs
    {
        std::uint64_t nodes = 1'000'000'000;
        double secs = 600.0;

        auto add_to(CLI::App & app) -> void
        {
            app.add_option("--budget-nodes", nodes, "Search node limit")->check(CLI::PositiveNumber);
            app.add_option("--budget-secs", secs, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
        }

        auto budget() const -> SolveBudget
        {
            return SolveBudget{ nodes, std::chrono::duration<double>{ secs } };
        }
    };

    struct GroupingArgs
    {
        int group_size = 1;
        bool relaxed = false;
        optional<int> colors;
        int degree = 4;

        auto add_to(CLI::App & app) -> void
        {
            app.add_option("--r", group_size, "Group size")->check(CLI::PositiveNumber);
            app.add_flag("--relaxed", relaxed, "Desk-scale constants; the number of labels is searched unless --colors is given");
            app.add_option("--colors", colors, "Number of labels in relaxed mode")->check(CLI::PositiveNumber);
            app.add_option("--degree", degree, "Degree bound d")->check(CLI::PositiveNumber);
        }

        auto params() const -> BalanceParams
        {
            if (relaxed)
                return BalanceParams::relaxed(degree, Rational{ 4 }, Rational{ 65536 }, colors);
            return BalanceParams::full_scale(degree);
        }
    };

    auto load_graph(const string & path) -> SimpleGraph
    {
        return read_graph(read_file(path));
    }

    auto anchor_comments(const AnchoredGraph & g) -> vector<string>
    {
        vector<string> comments;
        for (auto & [name, vertices] : g.anchors) {
            string line = "anchor " + name;
            for (int v : vertices)
                line += " " + to_string(v + 1);
            comments.push_back(line);
        }
        return comments;
    }

    auto write_or_print(const optional<string> & path, const string & text) -> void
    {
        if (path)
            write_file(*path, text);
        else
            cout << text;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Reductions between colouring, homomorphism and subgraph isomorphism problems, with exact solvers" };
    app.require_subcommand(1);

    // solve
    auto solve_cmd = app.add_subcommand("solve", "Decide an instance");
    string solve_kind, solve_pattern;
    optional<string> solve_target, solve_lists, solve_witness;
    int solve_k = 3;
    bool solve_count = false;
    BudgetArgs solve_budget;
    solve_cmd->add_option("kind", solve_kind, "hom, listhom, lihom, si or kcol")->required()
        ->check(CLI::IsMember({ "hom", "listhom", "lihom", "si", "kcol" }));
    solve_cmd->add_option("pattern", solve_pattern, "Pattern graph file")->required();
    solve_cmd->add_option("target", solve_target, "Target graph file (not for kcol)");
    solve_cmd->add_option("--lists", solve_lists, "List file (listhom)");
    solve_cmd->add_option("--k", solve_k, "Number of colours (kcol)")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--witness", solve_witness, "Write the witness here on a yes");
    solve_cmd->add_flag("--count", solve_count, "Count every solution");
    solve_budget.add_to(*solve_cmd);

    // reduce
    auto reduce_cmd = app.add_subcommand("reduce", "Build a reduced instance");
    string reduce_kind;
    vector<string> reduce_files;
    optional<string> reduce_lists;
    string reduce_prefix = "out";
    bool reduce_trim = true;
    std::uint64_t reduce_limit = 1000;
    GroupingArgs reduce_grouping;
    reduce_cmd->add_option("reduction", reduce_kind, "col2listhom, listhom2hom or hom2si")->required()
        ->check(CLI::IsMember({ "col2listhom", "listhom2hom", "hom2si" }));
    reduce_cmd->add_option("files", reduce_files, "Input graph files")->required();
    reduce_cmd->add_option("--lists", reduce_lists, "List file (listhom2hom)");
    reduce_cmd->add_flag("--trim,!--no-trim", reduce_trim, "Keep only target vertices occurring in some list (col2listhom)");
    reduce_cmd->add_option("--out-prefix", reduce_prefix, "Prefix for the files written");
    reduce_cmd->add_option("--limit", reduce_limit, "Most hosts to write (hom2si)");
    reduce_grouping.add_to(*reduce_cmd);

    // verify pipeline
    auto verify_cmd = app.add_subcommand("verify", "Check a reduction chain end to end");
    string verify_what, verify_graph;
    GroupingArgs verify_grouping;
    BudgetArgs verify_budget;
    verify_cmd->add_option("what", verify_what, "pipeline")->required()->check(CLI::IsMember({ "pipeline" }));
    verify_cmd->add_option("graph", verify_graph, "Graph file")->required();
    verify_grouping.add_to(*verify_cmd);
    verify_budget.add_to(*verify_cmd);

    // gadget
    auto gadget_cmd = app.add_subcommand("gadget", "Print a gadget with its anchors as comments");
    gadget_cmd->set_help_flag("--help", "Print this help message and exit");
    string gadget_kind;
    int gadget_h = 1, gadget_k = 1;
    optional<string> gadget_out;
    gadget_cmd->add_option("gadget", gadget_kind, "dprime, d, t or a")->required()
        ->check(CLI::IsMember({ "dprime", "d", "t", "a" }));
    gadget_cmd->add_option("--h", gadget_h, "Target size")->check(CLI::PositiveNumber);
    gadget_cmd->add_option("--k", gadget_k, "Block count (t)")->check(CLI::NonNegativeNumber);
    gadget_cmd->add_option("--out", gadget_out, "Write here instead of standard output");

    // gen
    auto gen_cmd = app.add_subcommand("gen", "Random graph with a degree cap and no isolated vertices");
    RandomSpec gen_spec;
    optional<string> gen_out;
    gen_cmd->add_option("--n", gen_spec.n, "Vertices")->required();
    gen_cmd->add_option("--max-deg", gen_spec.max_deg, "Degree cap")->required();
    gen_cmd->add_option("--seed", gen_spec.seed, "Seed")->required();
    gen_cmd->add_option("--out", gen_out, "Write here instead of standard output");

    // bench
    auto bench_cmd = app.add_subcommand("bench", "Subgraph isomorphism timing table as CSV");
    string bench_what;
    vector<int> bench_sizes;
    std::uint64_t bench_seed = 0;
    BenchOptions bench_options;
    bool bench_no_timing = false;
    BudgetArgs bench_budget{ 5'000'000, 30.0 };
    bench_cmd->add_option("what", bench_what, "si")->required()->check(CLI::IsMember({ "si" }));
    bench_cmd->add_option("--sizes", bench_sizes, "Pattern sizes")->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "Seed");
    bench_cmd->add_option("--per-size", bench_options.instances_per_size, "Instances per size")->check(CLI::NonNegativeNumber);
    bench_cmd->add_flag("--no-timing", bench_no_timing, "Write '-' instead of wall times");
    bench_budget.add_to(*bench_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (*solve_cmd) {
            auto kind = *parse_kind(solve_kind);
            auto pattern = load_graph(solve_pattern);
            ProblemInstance instance;
            if (kind == ProblemKind::kcol)
                instance = ProblemInstance::kcol(pattern, solve_k);
            else {
                if (! solve_target)
                    throw Error{ "a target graph is needed for " + solve_kind };
                auto target = load_graph(*solve_target);
                if (kind == ProblemKind::listhom) {
                    if (! solve_lists)
                        throw Error{ "listhom needs --lists" };
                    auto lists = read_lists(read_file(*solve_lists), pattern.vertex_count(), target.vertex_count());
                    instance = ProblemInstance::listhom(ListHomInstance{ pattern, target, lists });
                }
                else
                    instance = ProblemInstance{ kind, pattern, target, {}, 0 };
            }

            SolveOptions options;
            options.count = solve_count;
            auto outcome = solve(instance, solve_budget.budget(), options);
            cout << decision_name(outcome.decision) << " nodes " << outcome.nodes;
            if (solve_count && outcome.decision != Decision::timeout)
                cout << " solutions " << outcome.solutions;
            cout << '\n';
            if (outcome.witness && solve_witness)
                write_file(*solve_witness, write_witness(*outcome.witness));
            return exit_code(outcome.decision);
        }

        if (*reduce_cmd) {
            if (reduce_kind == "col2listhom") {
                if (reduce_files.size() != 1)
                    throw Error{ "col2listhom takes one graph" };
                ColToListHomOptions options;
                options.trim = reduce_trim;
                auto red = col_to_listhom(load_graph(reduce_files[0]), reduce_grouping.group_size, reduce_grouping.params(), options);
                vector<string> comments;
                for (std::size_t k = 0 ; k < red.encoding.size() ; ++k)
                    comments.push_back("vertex " + to_string(k + 1) + " " + encoding_string(red.encoding[k]));
                write_file(reduce_prefix + ".pattern.col", write_graph(red.instance.pattern));
                write_file(reduce_prefix + ".target.col", write_graph(red.instance.target, comments));
                write_file(reduce_prefix + ".lists", write_lists(red.instance.lists));
                cout << "labels " << red.grouping.labels.color_count() << " buckets " << red.grouping.buckets.size()
                    << " target " << red.instance.target.vertex_count() << '\n';
            }
            else if (reduce_kind == "listhom2hom") {
                if (reduce_files.size() != 2 || ! reduce_lists)
                    throw Error{ "listhom2hom takes a pattern, a target and --lists" };
                auto pattern = load_graph(reduce_files[0]);
                auto target = load_graph(reduce_files[1]);
                auto lists = read_lists(read_file(*reduce_lists), pattern.vertex_count(), target.vertex_count());
                auto hom = listhom_to_hom(ListHomInstance{ pattern, target, lists });
                write_file(reduce_prefix + ".pattern.col", write_graph(hom.pattern));
                write_file(reduce_prefix + ".target.col", write_graph(hom.target));
                cout << "pattern " << hom.pattern.vertex_count() << " target " << hom.target.vertex_count() << '\n';
            }
            else {
                if (reduce_files.size() != 2)
                    throw Error{ "hom2si takes a pattern and a target" };
                auto family = hom_to_si_instances(load_graph(reduce_files[0]), load_graph(reduce_files[1]));
                std::uint64_t written = 0;
                family.for_each([&] (const SiHost & host) {
                    if (written >= reduce_limit)
                        return false;
                    string seq = "replication";
                    for (int a : host.replication)
                        seq += " " + to_string(a);
                    write_file(reduce_prefix + ".host." + to_string(written) + ".col", write_graph(host.graph, { seq }));
                    ++written;
                    return true;
                });
                cout << "family " << family.size() << " written " << written << '\n';
            }
            return 0;
        }

        if (*verify_cmd) {
            PipelineOptions options;
            options.group_size = verify_grouping.group_size;
            options.params = verify_grouping.params();
            options.budget = verify_budget.budget();
            auto report = verify_pipeline(load_graph(verify_graph), options);
            cout << report.to_json().dump(2) << '\n';
            if (! report.consistent)
                return exit_error;
            return exit_code(report.stages.front().decision);
        }

        if (*gadget_cmd) {
            AnchoredGraph g;
            if (gadget_kind == "dprime")
                g = build_d_prime();
            else if (gadget_kind == "d")
                g = build_d(gadget_h);
            else if (gadget_kind == "t")
                g = build_t(gadget_k, gadget_h);
            else
                g = build_a(gadget_h);
            write_or_print(gadget_out, write_graph(g.graph, anchor_comments(g)));
            return 0;
        }

        if (*gen_cmd) {
            write_or_print(gen_out, write_graph(random_graph(gen_spec)));
            return 0;
        }

        if (*bench_cmd) {
            bench_options.timing = ! bench_no_timing;
            bench_options.budget = bench_budget.budget();
            cout << bench_si(bench_sizes, bench_seed, bench_options);
            return 0;
        }
    }
    catch (const std::exception & e) {
        cerr << "homred: " << e.what() << '\n';
        return exit_error;
    }

    return exit_error;
}
