/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <homred/errors.hh>
#include <homred/random_graph.hh>
#include <homred/reductions.hh>
#include <homred/solvers.hh>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace homred;

namespace
{
    auto singletons(const SimpleGraph & g) -> GroupedGraph
    {
        std::vector<std::vector<int>> buckets;
        std::vector<int> labels;
        for (int v = 0 ; v < g.vertex_count() ; ++v) {
            buckets.push_back({ v });
            labels.push_back(v + 1);
        }
        return GroupedGraph::from_buckets(g, buckets, Coloring{ g.vertex_count(), labels });
    }

    auto relaxed() -> BalanceParams
    {
        return BalanceParams::relaxed(4, Rational{ 4 }, Rational{ 65536 });
    }

    /// Random groupings of random bounded-degree graphs that pass the structural checks.
    auto valid_groupings(int wanted, int low, int high, std::uint64_t seed) -> std::vector<GroupedGraph>
    {
        std::vector<GroupedGraph> result;
        std::mt19937_64 rng{ seed };
        for (int attempt = 0 ; attempt < 20 * wanted && static_cast<int>(result.size()) < wanted ; ++attempt) {
            int n = low + static_cast<int>(bounded_draw(rng, high - low + 1));
            try {
                auto g = random_graph(RandomSpec{ n, 4, rng() });
                auto gg = grouping(g, 1, relaxed());
                if (verify_grouping(gg, 1).structural_pass())
                    result.push_back(std::move(gg));
            }
            catch (const Error &) {
            }
        }
        return result;
    }

    /// A homomorphism of the reduced instance for a single vertex with an empty list over h <= 2 isolated
    /// targets: the vertex goes to z_1 and each pair a_j b_j into the clique of block j - 1, off the z's.
    auto escape_witness(const HomInstance & hom, int h) -> Witness
    {
        auto t = build_t(h, h);
        auto a = build_a(h);
        int t_size = t.graph.vertex_count();
        auto & prov = hom.provenance;
        std::vector<int> mapping(hom.pattern.vertex_count(), -1);
        for (std::size_t k = 0 ; k < prov.gadget_in_pattern.size() ; ++k)
            mapping[prov.gadget_in_pattern[k]] = prov.gadget_in_target[k];

        auto & z = t.anchor("z");
        mapping[prov.pattern_vertex[0]] = prov.gadget_in_target[z[0]];
        for (int j = 0 ; j < h ; ++j) {
            std::vector<int> spare;
            for (int v : t.anchor("clique." + std::to_string(j)))
                if (std::find(z.begin(), z.end(), v) == z.end())
                    spare.push_back(prov.gadget_in_target[v]);
            mapping[prov.gadget_in_pattern[t_size + a.anchor("a")[j]]] = spare[0];
            mapping[prov.gadget_in_pattern[t_size + a.anchor("b")[j]]] = spare[1];
        }
        return Witness{ mapping };
    }

    auto random_instance(int max_pattern, int target_size, std::mt19937_64 & rng) -> ListHomInstance
    {
        int n = 1 + static_cast<int>(bounded_draw(rng, max_pattern));
        auto pattern = random_gnp(n, 1, 2, rng);
        auto target = random_gnp(target_size, 1, 2, rng);
        return ListHomInstance{ pattern, target, random_lists(n, target_size, rng) };
    }
}

TEST_CASE("bucket neighbour map")
{
    SUBCASE("singleton grouping of an edge")
    {
        auto gg = singletons(complete_graph(2));
        auto phi = bucket_neighbor_map(gg, gg.bucket_of[0]);
        CHECK(phi == std::vector<int>{ -1, 0 });
        CHECK(bucket_neighbor_map(gg, gg.bucket_of[1]) == std::vector<int>{ 1, -1 });
    }

    SUBCASE("labels without a neighbouring bucket are absent")
    {
        auto gg = singletons(path_graph(3));
        CHECK(bucket_neighbor_map(gg, gg.bucket_of[0]) == std::vector<int>{ -1, 0, -1 });
    }

    SUBCASE("a bucket touching one label twice is rejected")
    {
        // vertices 0 and 2 share a bucket and both see the bucket of vertex 1
        auto gg = GroupedGraph::from_buckets(path_graph(3), { { 0, 2 }, { 1 } }, Coloring{ 2, { 1, 2 } });
        CHECK_THROWS_AS(bucket_neighbor_map(gg, gg.bucket_of[0]), GroupingPropertyViolated);
    }

    SUBCASE("every bucket vertex appears in the map when nothing is isolated")
    {
        auto groupings = valid_groupings(30, 12, 24, 11);
        CHECK(groupings.size() >= 20);
        for (auto & gg : groupings)
            for (int b = 0 ; b < static_cast<int>(gg.buckets.size()) ; ++b) {
                auto phi = bucket_neighbor_map(gg, b);
                std::set<int> image(phi.begin(), phi.end());
                for (int v : gg.buckets[b])
                    CHECK(image.contains(v));
                for (int i = 0 ; i < static_cast<int>(phi.size()) ; ++i)
                    if (phi[i] != -1) {
                        CHECK(gg.bucket_of[phi[i]] == b);
                        bool sees_label = false;
                        for (int u : gg.base.neighbours(phi[i]))
                            sees_label = sees_label || gg.labels[gg.bucket_of[u]] == i + 1;
                        CHECK(sees_label);
                    }
            }
    }
}

TEST_CASE("encode colouring")
{
    SUBCASE("no neighbours gives zeros")
    {
        auto gg = GroupedGraph::from_buckets(edgeless_graph(2), { { 0 }, { 1 } }, Coloring{ 2, { 1, 2 } });
        std::vector<int> f{ 3 };
        CHECK(encode_coloring(gg, 0, f) == std::vector<std::uint8_t>{ 0, 0 });
    }

    SUBCASE("singleton facing label three")
    {
        auto gg = GroupedGraph::from_buckets(complete_graph(2), { { 0 }, { 1 } }, Coloring{ 3, { 1, 3 } });
        std::vector<int> f{ 2 };
        CHECK(encode_coloring(gg, gg.bucket_of[0], f) == std::vector<std::uint8_t>{ 0, 0, 2 });
    }

    SUBCASE("distinct colourings of one bucket give distinct codes")
    {
        for (auto & gg : valid_groupings(15, 12, 20, 12))
            for (int b = 0 ; b < static_cast<int>(gg.buckets.size()) ; ++b) {
                int size = static_cast<int>(gg.buckets[b].size());
                if (size > 6)
                    continue;
                std::set<std::vector<std::uint8_t>> codes;
                std::uint64_t seen = 0;
                oracle::for_each_map(size, 3, [&] (const std::vector<int> & f) {
                    std::vector<int> colours;
                    for (int x : f)
                        colours.push_back(x + 1);
                    codes.insert(encode_coloring(gg, b, colours));
                    ++seen;
                    return true;
                });
                CHECK(codes.size() == seen);
            }
    }
}

TEST_CASE("encoded target vertices")
{
    EncodedTargetVertex a{ { 0, 1, 2 }, 1 }, b{ { 3, 1, 0 }, 2 };
    // a's entry at b's label is 1, b's entry at a's label is 3
    CHECK(encoded_adjacent(a, b));
    CHECK(encoded_adjacent(b, a));
    EncodedTargetVertex c{ { 1, 0, 0 }, 2 };
    CHECK(! encoded_adjacent(a, c));
    CHECK(encoding_string(EncodedTargetVertex{ { 0, 1, 2, 0 }, 3 }) == "3:0120");
    CHECK(a < b);
    CHECK(c < b);
}

TEST_CASE("colouring to list homomorphism")
{
    SUBCASE("triangle is satisfiable, K4 is not")
    {
        auto k3 = col_to_listhom(singletons(complete_graph(3)));
        CHECK(oracle::exists(oracle::Kind::listhom, k3.instance.pattern, k3.instance.target, k3.instance.lists));
        CHECK(solve_listhom(k3.instance).decision == Decision::yes);

        auto k4 = col_to_listhom(singletons(complete_graph(4)));
        CHECK(! oracle::exists(oracle::Kind::listhom, k4.instance.pattern, k4.instance.target, k4.instance.lists));
        CHECK(solve_listhom(k4.instance).decision == Decision::no);
    }

    SUBCASE("untrimmed target has every code")
    {
        ColToListHomOptions untrimmed;
        untrimmed.trim = false;
        for (int l = 2 ; l <= 4 ; ++l) {
            auto r = col_to_listhom(singletons(complete_graph(l)), untrimmed);
            long long expected = l;
            for (int i = 0 ; i < l ; ++i)
                expected *= 4;
            CHECK(r.instance.target.vertex_count() == expected);
            CHECK(expected <= (1LL << (3 * l)));
            CHECK(r.encoding.size() == static_cast<std::size_t>(expected));
        }
    }

    SUBCASE("target edges follow the encoding rule")
    {
        auto r = col_to_listhom(singletons(cycle_graph(5)));
        auto & t = r.instance.target;
        for (int u = 0 ; u < t.vertex_count() ; ++u)
            for (int v = 0 ; v < t.vertex_count() ; ++v)
                if (u != v)
                    CHECK(t.adjacent(u, v) == encoded_adjacent(r.encoding[u], r.encoding[v]));
    }

    SUBCASE("lists hold one code per colouring of the bucket")
    {
        for (auto & gg : valid_groupings(10, 12, 18, 13)) {
            auto r = col_to_listhom(gg);
            for (int b = 0 ; b < static_cast<int>(gg.buckets.size()) ; ++b) {
                std::uint64_t expected = 1;
                for (std::size_t i = 0 ; i < gg.buckets[b].size() ; ++i)
                    expected *= 3;
                CHECK(r.instance.lists[b].size() == expected);
                for (int k : r.instance.lists[b])
                    CHECK(r.encoding[k].label == gg.labels[b]);
            }
        }
    }

    SUBCASE("isolated vertices are refused")
    {
        CHECK_THROWS_AS(col_to_listhom(edgeless_graph(3), 1, relaxed()), IsolatedVertex);
    }

    SUBCASE("agrees with brute-force colourability, with trimmed and untrimmed targets agreeing")
    {
        std::mt19937_64 rng{ 14 };
        int checked = 0;
        for (int i = 0 ; i < 60 ; ++i) {
            int n = 6 + static_cast<int>(bounded_draw(rng, 5));
            auto g = random_graph(RandomSpec{ n, 4, rng() });
            ColToListHom r;
            try {
                r = col_to_listhom(g, 1, relaxed());
            }
            catch (const Error &) {
                continue;
            }
            ++checked;
            bool colourable = oracle::colourable(g, 3);
            auto outcome = solve_listhom(r.instance);
            CHECK(outcome.decision == (colourable ? Decision::yes : Decision::no));

            if (outcome.witness) {
                // the list homomorphism is locally injective on the quotient
                CHECK(oracle::satisfies(oracle::Kind::lihom, r.instance.pattern, r.instance.target, {}, outcome.witness->mapping));
                auto c = project_to_coloring(r, *outcome.witness);
                CHECK(is_proper(g, c));
                auto again = lift_coloring(r, c);
                CHECK(check_witness(ProblemInstance::listhom(r.instance), again));
                CHECK(project_to_coloring(r, again) == c);
            }

        }
        CHECK(checked >= 40);
    }

    SUBCASE("trimmed and untrimmed targets agree")
    {
        ColToListHomOptions untrimmed;
        untrimmed.trim = false;
        for (auto g : { complete_graph(2), path_graph(4), cycle_graph(4), cycle_graph(5), complete_graph(4) }) {
            auto gg = singletons(g);
            auto trimmed = col_to_listhom(gg);
            auto full = col_to_listhom(gg, untrimmed);
            CHECK(trimmed.instance.target.vertex_count() < full.instance.target.vertex_count());
            auto decision = solve_listhom(trimmed.instance).decision;
            CHECK(decision == solve_listhom(full.instance).decision);
            CHECK(decision == (oracle::colourable(g, 3) ? Decision::yes : Decision::no));
        }
    }

    SUBCASE("lifting checks its input")
    {
        auto r = col_to_listhom(singletons(complete_graph(3)));
        CHECK_THROWS_AS(lift_coloring(r, Coloring{ 3, { 1, 1, 2 } }), InvalidWitness);
        auto w = lift_coloring(r, Coloring{ 3, { 1, 2, 3 } });
        CHECK(check_witness(ProblemInstance::listhom(r.instance), w));
        CHECK(project_to_coloring(r, w) == Coloring{ 3, { 1, 2, 3 } });
    }
}

TEST_CASE("list homomorphism to homomorphism")
{
    SUBCASE("sizes")
    {
        std::mt19937_64 rng{ 21 };
        for (int h = 1 ; h <= 4 ; ++h)
            for (int i = 0 ; i < 5 ; ++i) {
                auto inst = random_instance(6, h, rng);
                auto hom = listhom_to_hom(inst);
                CHECK(hom.target.vertex_count() <= 25 * h * h);
                CHECK(hom.pattern.vertex_count() <= inst.pattern.vertex_count() + 25 * h * h);
                CHECK(hom.pattern.vertex_count() - inst.pattern.vertex_count() == hom.target.vertex_count() - h);
            }
        auto three = listhom_to_hom(ListHomInstance::unrestricted(complete_graph(1), complete_graph(3)));
        CHECK(three.target.vertex_count() <= 225);
    }

    SUBCASE("single vertex")
    {
        auto yes = listhom_to_hom(ListHomInstance{ complete_graph(1), complete_graph(1), { { 0 } } });
        CHECK(solve_hom(yes.pattern, yes.target).decision == Decision::yes);

        for (int h = 4 ; h <= 5 ; ++h) {
            auto no = listhom_to_hom(ListHomInstance{ complete_graph(1), edgeless_graph(h), { {} } });
            CHECK(solve_hom(no.pattern, no.target).decision == Decision::no);
        }
    }

    SUBCASE("lift and project")
    {
        ListHomInstance inst{ complete_graph(1), complete_graph(1), { { 0 } } };
        auto hom = listhom_to_hom(inst);
        auto lifted = lift_witness(hom, Witness{ { 0 } });
        CHECK(check_witness(ProblemInstance::hom(hom.pattern, hom.target), lifted));
        CHECK(project_witness(hom, lifted) == Witness{ { 0 } });

        ListHomInstance restricted{ complete_graph(2), complete_graph(3), { { 0 }, { 1, 2 } } };
        auto hom2 = listhom_to_hom(restricted);
        CHECK_THROWS_AS(lift_witness(hom2, Witness{ { 1, 2 } }), InvalidWitness);
        CHECK_THROWS_AS(lift_witness(hom2, Witness{ { 0, 0 } }), InvalidWitness);
        auto good = lift_witness(hom2, Witness{ { 0, 2 } });
        CHECK(project_witness(hom2, good) == Witness{ { 0, 2 } });

        // break one pattern edge of the lifted map
        auto broken = good;
        broken.mapping[hom2.provenance.pattern_vertex[1]] = broken.mapping[hom2.provenance.pattern_vertex[0]];
        CHECK_THROWS_AS(project_witness(hom2, broken), InvalidWitness);
    }

    SUBCASE("round trips on random instances")
    {
        std::mt19937_64 rng{ 22 };
        int lifted = 0;
        for (int i = 0 ; i < 40 ; ++i) {
            auto inst = random_instance(5, 2 + static_cast<int>(bounded_draw(rng, 3)), rng);
            std::vector<int> f;
            bool found = false;
            oracle::for_each_map(inst.pattern.vertex_count(), inst.target.vertex_count(), [&] (const std::vector<int> & m) {
                found = oracle::satisfies(oracle::Kind::listhom, inst.pattern, inst.target, inst.lists, m);
                if (found)
                    f = m;
                return ! found;
            });
            if (! found)
                continue;
            auto hom = listhom_to_hom(inst);
            auto w = lift_witness(hom, Witness{ f });
            CHECK(check_witness(ProblemInstance::hom(hom.pattern, hom.target), w));
            CHECK(project_witness(hom, w) == Witness{ f });
            ++lifted;
        }
        CHECK(lifted >= 10);
    }

    SUBCASE("with at most three target vertices a homomorphism can escape into the gadget")
    {
        for (int h = 1 ; h <= 3 ; ++h) {
            ListHomInstance inst{ complete_graph(1), edgeless_graph(h), { {} } };
            CHECK(! oracle::exists(oracle::Kind::listhom, inst.pattern, inst.target, inst.lists));
            auto hom = listhom_to_hom(inst);
            auto outcome = solve_hom(hom.pattern, hom.target);
            CHECK(outcome.decision == Decision::yes);
            REQUIRE(outcome.witness);
            CHECK(check_witness(ProblemInstance::hom(hom.pattern, hom.target), *outcome.witness));
            CHECK_THROWS_AS(project_witness(hom, *outcome.witness), InvalidWitness);

            if (h <= 2) {
                auto w = escape_witness(hom, h);
                auto check = check_witness(ProblemInstance::hom(hom.pattern, hom.target), w);
                CHECK_MESSAGE(check.valid, check.violation);
                CHECK_THROWS_AS(project_witness(hom, w), InvalidWitness);
            }
        }
    }

    SUBCASE("decisions agree once the target has four or five vertices")
    {
        std::mt19937_64 rng{ 23 };
        SolveBudget budget{ 2'000'000, std::chrono::seconds{ 20 } };
        for (int h : { 4, 5 })
            for (int i = 0 ; i < 6 ; ++i) {
                auto inst = random_instance(3, h, rng);
                auto hom = listhom_to_hom(inst);
                auto expected = oracle::exists(oracle::Kind::listhom, inst.pattern, inst.target, inst.lists);
                auto outcome = solve_hom(hom.pattern, hom.target, budget);
                REQUIRE(outcome.decision != Decision::timeout);
                CHECK(outcome.decision == (expected ? Decision::yes : Decision::no));
            }
    }
}

TEST_CASE("homomorphism to subgraph isomorphism family")
{
    SUBCASE("edge into edge")
    {
        auto family = hom_to_si_instances(complete_graph(2), complete_graph(2));
        CHECK(family.size() == 3);
        std::vector<std::vector<int>> sequences;
        std::vector<bool> answers;
        family.for_each([&] (const SiHost & host) {
            sequences.push_back(host.replication);
            answers.push_back(solve_si(family.pattern(), host.graph).decision == Decision::yes);
            return true;
        });
        CHECK(sequences == std::vector<std::vector<int>>{ { 2, 0 }, { 1, 1 }, { 0, 2 } });
        CHECK(answers == std::vector<bool>{ false, true, false });
    }

    SUBCASE("triangle into edge")
    {
        auto family = hom_to_si_instances(complete_graph(3), complete_graph(2));
        CHECK(family.size() == 4);
        int hosts = 0;
        family.for_each([&] (const SiHost & host) {
            ++hosts;
            CHECK(! oracle::exists(oracle::Kind::si, family.pattern(), host.graph));
            return true;
        });
        CHECK(hosts == 4);
    }

    SUBCASE("sizes match stars and bars and direct enumeration")
    {
        CHECK(hom_to_si_instances(path_graph(4), complete_graph(3)).size() == 15);
        for (int n = 1 ; n <= 5 ; ++n)
            for (int m = 1 ; m <= 5 ; ++m) {
                auto family = hom_to_si_instances(edgeless_graph(n), edgeless_graph(m));
                CHECK(family.size() == oracle::binomial(n + m - 1, m - 1));
                CHECK(family.size() == oracle::compositions(n, m));
                std::uint64_t walked = 0;
                std::set<std::vector<int>> distinct;
                std::vector<int> previous;
                for (auto seq = family.first() ; seq ; ) {
                    ++walked;
                    CHECK(distinct.insert(*seq).second);
                    if (! previous.empty())
                        CHECK(*seq < previous);
                    previous = *seq;
                    if (! family.next(*seq))
                        break;
                }
                CHECK(walked == family.size());
            }
    }

    SUBCASE("hosts replicate vertices as independent copies")
    {
        auto base = cycle_graph(5);
        auto family = hom_to_si_instances(path_graph(4), base);
        family.for_each([&] (const SiHost & host) {
            CHECK(host.graph.vertex_count() == 4);
            for (int v = 0 ; v < 5 ; ++v)
                CHECK(std::count(host.prototype.begin(), host.prototype.end(), v) == host.replication[v]);
            for (int x = 0 ; x < 4 ; ++x)
                for (int y = 0 ; y < 4 ; ++y)
                    if (x != y)
                        CHECK(host.graph.adjacent(x, y) == base.adjacent(host.prototype[x], host.prototype[y]));
            return true;
        });
    }

    SUBCASE("OR over the family matches homomorphism existence")
    {
        std::vector<SimpleGraph> small{ complete_graph(1), complete_graph(2), path_graph(3), cycle_graph(4), complete_graph(3) };
        for (auto & g : small)
            for (auto & h : small) {
                bool any = false;
                hom_to_si_instances(g, h).for_each([&] (const SiHost & host) {
                    auto outcome = solve_si(g, host.graph);
                    if (outcome.witness) {
                        any = true;
                        CHECK(oracle::satisfies(oracle::Kind::hom, g, h, {}, project_si_witness(host, *outcome.witness).mapping));
                    }
                    return ! any;
                });
                CHECK(any == oracle::exists(oracle::Kind::hom, g, h));
            }
    }
}
