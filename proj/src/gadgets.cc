/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/bitset.hh>
#include <homred/errors.hh>
#include <homred/gadgets.hh>

#include <string>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace homred
{
    auto AnchoredGraph::anchor(const string & name) const -> const vector<int> &
    {
        return anchors.at(name);
    }

    auto build_d_prime() -> AnchoredGraph
    {
        vector<Edge> edges;
        for (int i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, 5);
        }
        return AnchoredGraph{ SimpleGraph::from_edges(6, edges), { { "apex", { 5 } }, { "cycle", { 0, 1, 2, 3, 4 } } } };
    }

    auto build_d(int h) -> AnchoredGraph
    {
        if (h < 1)
            throw InvalidGraph{ "gadget D needs h >= 1" };

        const int clique_size = h + 3;
        vector<Edge> edges;
        vector<int> clique, cycle;
        for (int u = 0 ; u < clique_size ; ++u) {
            clique.push_back(u);
            for (int v = u + 1 ; v < clique_size ; ++v)
                edges.emplace_back(u, v);
            for (int x = 0 ; x < 5 ; ++x)
                edges.emplace_back(u, clique_size + x);
        }
        for (int x = 0 ; x < 5 ; ++x) {
            cycle.push_back(clique_size + x);
            edges.emplace_back(clique_size + x, clique_size + (x + 1) % 5);
        }

        return AnchoredGraph{ SimpleGraph::from_edges(clique_size + 5, edges), { { "clique", clique }, { "cycle", cycle } } };
    }

    auto build_t(int k, int h) -> AnchoredGraph
    {
        if (k < 0)
            throw InvalidGraph{ "gadget T needs k >= 0" };

        auto block = build_d(h);
        const int first_clique = block.anchor("clique").front(), first_cycle = block.anchor("cycle").front();

        vector<SimpleGraph> parts(k + 1, block.graph);
        vector<pair<Handle, Handle>> identifications;
        for (int i = 1 ; i <= k ; ++i)
            identifications.emplace_back(Handle{ i, first_clique }, Handle{ i - 1, first_cycle });

        auto assembly = assemble(parts, identifications, {});

        AnchoredGraph result{ assembly.graph, {} };
        auto & z = result.anchors["z"];
        for (int i = 0 ; i <= k ; ++i) {
            for (auto & name : { string{ "clique" }, string{ "cycle" } }) {
                auto & anchor = result.anchors[name + "." + to_string(i)];
                for (int v : block.anchor(name))
                    anchor.push_back(assembly.handle_map[i][v]);
            }
            if (i >= 1)
                z.push_back(assembly.handle_map[i][first_clique]);
        }
        return result;
    }

    auto build_a(int h) -> AnchoredGraph
    {
        if (h < 1)
            throw InvalidGraph{ "gadget A needs h >= 1" };

        vector<Edge> edges;
        vector<int> a, b;
        for (int i = 0 ; i < h ; ++i) {
            a.push_back(2 * i);
            b.push_back(2 * i + 1);
            edges.emplace_back(2 * i, 2 * i + 1);
        }
        return AnchoredGraph{ SimpleGraph::from_edges(2 * h, edges), { { "a", a }, { "b", b } } };
    }

    namespace
    {
        struct EndomorphismSearch
        {
            const SimpleGraph & g;
            std::uint64_t node_limit;
            const std::function<auto (const Witness &) -> bool> & visit;

            vector<Bitset> rows;
            Witness current;
            std::uint64_t nodes = 0, found = 0;

            auto run() -> void
            {
                const int n = g.vertex_count();
                rows.assign(n, Bitset(n));
                for (int v = 0 ; v < n ; ++v)
                    for (int u : g.neighbours(v))
                        rows[v].set(u);

                current.mapping.assign(n, -1);
                vector<Bitset> domains(n, Bitset(n, true));
                search(0, domains);
            }

            // returns false once the visitor asks to stop
            auto search(int v, const vector<Bitset> & domains) -> bool
            {
                if (v == g.vertex_count()) {
                    ++found;
                    return visit(current);
                }

                bool keep_going = true;
                domains[v].for_each([&] (int t) {
                    if (! keep_going)
                        return;
                    if (++nodes > node_limit)
                        throw BudgetExceeded{ found, "endomorphism search exceeded " + to_string(node_limit) + " nodes" };

                    // forward check the later neighbours of v against the image of v
                    auto next = domains;
                    next[v] = Bitset(g.vertex_count());
                    next[v].set(t);
                    for (int u : g.neighbours(v)) {
                        if (u < v)
                            continue;
                        next[u] &= rows[t];
                        if (next[u].none())
                            return;
                    }

                    current.mapping[v] = t;
                    keep_going = search(v + 1, next);
                });
                current.mapping[v] = -1;
                return keep_going;
            }
        };
    }

    auto for_each_endomorphism(const SimpleGraph & g, std::uint64_t node_limit,
            const std::function<auto (const Witness &) -> bool> & visit) -> void
    {
        EndomorphismSearch search{ g, node_limit, visit, {}, {} };
        search.run();
    }

    auto endomorphisms(const AnchoredGraph & g, std::uint64_t node_limit) -> vector<Witness>
    {
        vector<Witness> result;
        for_each_endomorphism(g.graph, node_limit, [&] (const Witness & w) {
            result.push_back(w);
            return true;
        });
        return result;
    }
}
