/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <homred/errors.hh>
#include <homred/formats.hh>
#include <homred/pipeline.hh>
#include <homred/random_graph.hh>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

using namespace homred;

namespace
{
    auto scratch_dir() -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / ("homred-tests-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        return dir;
    }

    auto run_cli(const std::string & args) -> int
    {
        std::string command = std::string{ HOMRED_CLI } + " " + args + " > /dev/null 2>&1";
        int status = std::system(command.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
}

TEST_CASE("graph format")
{
    CHECK(read_graph("p edge 2 1\ne 1 2\n") == complete_graph(2));
    CHECK(write_graph(complete_graph(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(read_graph("c hello\n\np edge 3 1\nc more\ne 3 1\n") == SimpleGraph::from_edges(3, std::vector<Edge>{ { 0, 2 } }));
    CHECK(write_graph(complete_graph(2), { "first", "second" }) == "c first\nc second\np edge 2 1\ne 1 2\n");

    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 1\n"), LoopEdge);
    CHECK_THROWS_AS(read_graph("p edge 2 2\ne 1 2\ne 2 1\n"), DuplicateEdge);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 3\n"), VertexOutOfRange);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 0\n"), VertexOutOfRange);
    CHECK_THROWS_AS(read_graph("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 2 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 2 1\ne 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 2 1\nx\n"), ParseError);
    try {
        read_graph("p edge 3 2\ne 1 2\ne 2 x\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }

    SUBCASE("round trips")
    {
        std::mt19937_64 rng{ 41 };
        for (int i = 0 ; i < 100 ; ++i) {
            auto g = random_gnp(static_cast<int>(bounded_draw(rng, 30)), 1, 1 + bounded_draw(rng, 6), rng);
            auto text = write_graph(g);
            CHECK(read_graph(text) == g);
            CHECK(write_graph(read_graph(text)) == text);
        }
    }
}

TEST_CASE("list format")
{
    auto lists = read_lists("l 1 2 3\n", 2, 3);
    CHECK(lists == Lists{ { 1, 2 }, {} });
    CHECK(read_lists("l 1\n", 1, 3) == Lists{ {} });
    CHECK(read_lists("l 1 3 1 3\n", 1, 3) == Lists{ { 0, 2 } });
    CHECK(write_lists(Lists{ { 1, 2 }, {} }) == "l 1 2 3\nl 2\n");
    CHECK_THROWS_AS(read_lists("l 1 4\n", 1, 3), VertexOutOfRange);
    CHECK_THROWS_AS(read_lists("l 2 1\n", 1, 3), VertexOutOfRange);
    CHECK_THROWS_AS(read_lists("l x\n", 1, 3), ParseError);

    std::mt19937_64 rng{ 42 };
    for (int i = 0 ; i < 100 ; ++i) {
        int n = 1 + static_cast<int>(bounded_draw(rng, 12)), m = 1 + static_cast<int>(bounded_draw(rng, 12));
        auto random = random_lists(n, m, rng);
        auto text = write_lists(random);
        CHECK(read_lists(text, n, m) == random);
        CHECK(write_lists(read_lists(text, n, m)) == text);
    }
}

TEST_CASE("witness format")
{
    CHECK(write_witness(Witness{ { 2, 0 } }) == "w 1 3\nw 2 1\n");
    CHECK(read_witness("w 2 1\nw 1 3\n", 2) == Witness{ { 2, 0 } });
    CHECK_THROWS_AS(read_witness("w 1 1\n", 2), InputError);
    CHECK_THROWS_AS(read_witness("w 1 1\nw 1 2\nw 2 1\n", 2), InputError);
}

TEST_CASE("random graphs")
{
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed)
        CHECK(random_graph(RandomSpec{ 2, 1, seed }) == complete_graph(2));

    CHECK(random_graph(RandomSpec{ 30, 3, 99 }) == random_graph(RandomSpec{ 30, 3, 99 }));
    CHECK_THROWS_AS(random_graph(RandomSpec{ 3, 1, 0 }), GenerationFailed);

    for (std::uint64_t seed = 0 ; seed < 1000 ; ++seed) {
        auto g = random_graph(RandomSpec{ 12, 4, seed });
        CHECK(g.vertex_count() == 12);
        CHECK(g.max_degree() <= 4);
        for (int v = 0 ; v < 12 ; ++v)
            CHECK(g.degree(v) >= 1);
    }
}

TEST_CASE("benchmark table")
{
    BenchOptions options;
    options.timing = false;
    options.instances_per_size = 2;
    CHECK(bench_si({}, 1, options) == "n,instance,nodes,wall_ms,decision\n");
    auto a = bench_si({ 4, 5 }, 3, options), b = bench_si({ 4, 5 }, 3, options);
    CHECK(a == b);
    CHECK(std::count(a.begin(), a.end(), '\n') == 5);
}

TEST_CASE("pipeline")
{
    PipelineOptions options;
    options.params = BalanceParams::relaxed(4, Rational{ 4 }, Rational{ 65536 });
    options.budget = SolveBudget{ 5'000'000, std::chrono::seconds{ 60 } };

    auto k3 = verify_pipeline(complete_graph(3), options);
    REQUIRE(k3.stages.size() == 3);
    for (auto & s : k3.stages)
        CHECK(s.decision == Decision::yes);
    CHECK(k3.consistent);
    CHECK(! k3.checks.empty());
    for (auto & [name, passed] : k3.checks) {
        CAPTURE(name);
        CHECK(passed);
    }

    auto k4 = verify_pipeline(complete_graph(4), options);
    for (auto & s : k4.stages)
        CHECK(s.decision == Decision::no);
    CHECK(k4.consistent);

    auto json = k3.to_json();
    CHECK(json["consistent"] == true);
    CHECK(json["stages"].size() == 3);
}

TEST_CASE("command line exit codes")
{
    auto dir = scratch_dir();
    auto path = [&] (const std::string & name) { return (dir / name).string(); };
    write_file(path("c5.col"), write_graph(cycle_graph(5)));
    write_file(path("k2.col"), write_graph(complete_graph(2)));
    write_file(path("k4.col"), write_graph(complete_graph(4)));
    write_file(path("bad.col"), "p edge 2 1\ne 1 1\n");
    write_file(path("lists"), "l 1 1\nl 2 1 2\nl 3 2\nl 4 1 2\nl 5 1\n");

    CHECK(run_cli("solve hom " + path("c5.col") + " " + path("k4.col")) == 0);
    CHECK(run_cli("solve hom " + path("c5.col") + " " + path("k2.col")) == 1);
    CHECK(run_cli("solve kcol " + path("k4.col") + " --k 3") == 1);
    CHECK(run_cli("solve kcol " + path("k4.col") + " --k 4") == 0);
    CHECK(run_cli("solve si " + path("k2.col") + " " + path("c5.col")) == 0);
    CHECK(run_cli("solve listhom " + path("c5.col") + " " + path("k4.col") + " --lists " + path("lists")) == 1);
    CHECK(run_cli("solve hom " + path("bad.col") + " " + path("k2.col")) == 2);
    CHECK(run_cli("solve hom " + path("missing.col") + " " + path("k2.col")) == 2);
    CHECK(run_cli("solve frobnicate " + path("c5.col")) == 2);
    CHECK(run_cli("--help") == 0);

    CHECK(run_cli("solve hom " + path("c5.col") + " " + path("c5.col") + " --witness " + path("w")) == 0);
    auto w = read_witness(read_file(path("w")), 5);
    CHECK(check_witness(ProblemInstance::hom(cycle_graph(5), cycle_graph(5)), w));

    CHECK(run_cli("gen --n 10 --max-deg 3 --seed 5 --out " + path("gen.col")) == 0);
    CHECK(read_graph(read_file(path("gen.col"))) == random_graph(RandomSpec{ 10, 3, 5 }));

    CHECK(run_cli("gadget dprime --out " + path("dprime.col")) == 0);
    CHECK(read_graph(read_file(path("dprime.col"))).edge_count() == 10);

    std::filesystem::remove_all(dir);
}
