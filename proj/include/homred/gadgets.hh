/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_GADGETS_HH
#define HOMRED_GUARD_GADGETS_HH 1

#include <homred/graph.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace homred
{
    /**
     * A gadget graph together with named sets of designated vertices.
     *
     * Anchor names used by the builders:
     *   "apex", "cycle"                 for D'
     *   "clique", "cycle"               for D
     *   "clique.i", "cycle.i", "z"      for T (block i, and z_1 .. z_k in order)
     *   "a", "b"                        for A (a_i and b_i in order)
     */
    struct AnchoredGraph
    {
        SimpleGraph graph;
        std::map<std::string, std::vector<int>> anchors;

        /// Throws std::out_of_range for an unknown anchor name.
        auto anchor(const std::string & name) const -> const std::vector<int> &;
    };

    /// 5-cycle x1..x5 on vertices 0..4 with apex z = 5 joined to all of them.
    auto build_d_prime() -> AnchoredGraph;

    /// Canonical clique K_{h+3} on vertices 0..h+2, 5-cycle on h+3..h+7, clique joined completely to the cycle.
    auto build_d(int h) -> AnchoredGraph;

    /**
     * Blocks D_0 .. D_k, each a copy of build_d(h). For i in 1..k the smallest
     * canonical-clique vertex of D_i (called z_i) is merged with the smallest
     * cycle vertex of D_{i-1}.
     */
    auto build_t(int k, int h) -> AnchoredGraph;

    /// Perfect matching a_i b_i on vertices a_i = 2(i-1), b_i = 2(i-1) + 1.
    auto build_a(int h) -> AnchoredGraph;

    /**
     * Visit every homomorphism from g to itself in lexicographic order of the
     * image vector. The visitor returns false to stop early. Throws
     * BudgetExceeded, carrying the number of maps already visited, once more
     * than node_limit search nodes have been expanded.
     */
    auto for_each_endomorphism(const SimpleGraph & g, std::uint64_t node_limit,
            const std::function<auto (const Witness &) -> bool> & visit) -> void;

    /// Every endomorphism, in the same order as for_each_endomorphism.
    auto endomorphisms(const AnchoredGraph & g, std::uint64_t node_limit) -> std::vector<Witness>;
}

#endif
