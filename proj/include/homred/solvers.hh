/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_SOLVERS_HH
#define HOMRED_GUARD_SOLVERS_HH 1

#include <homred/graph.hh>
#include <homred/instances.hh>

#include <chrono>
#include <cstdint>
#include <optional>

namespace homred
{
    struct SolveBudget
    {
        std::uint64_t node_limit = 1'000'000'000;
        std::chrono::duration<double> wall_limit = std::chrono::seconds{ 600 };
    };

    enum class Decision
    {
        yes,
        no,
        timeout
    };

    auto decision_name(Decision d) -> const char *;

    struct SolveOutcome
    {
        Decision decision = Decision::timeout;
        /// Present exactly when the decision is yes and counting was off.
        std::optional<Witness> witness;
        std::uint64_t nodes = 0;
        /// Number of solutions in count mode (saturating); 1 for a yes otherwise.
        std::uint64_t solutions = 0;
    };

    struct SolveOptions
    {
        /// Enumerate every solution instead of stopping at the first.
        bool count = false;
        /// Revise domains against every constraint to a fixpoint at each search node.
        bool arc_consistency = true;
        /// Prune target values whose clique or degree bounds cannot host the pattern vertex.
        bool structural_filters = true;
        /// Solve parts of the pattern that propagation has cut apart independently of each other.
        bool decompose = true;
        /// Matching-based filtering on groups of pattern vertices that need distinct images: cliques, and for
        /// locally injective homomorphisms closed neighbourhoods, and for subgraph isomorphism everything.
        bool distinct_filtering = true;
    };

    /**
     * Backtracking search over pattern vertices with domains of target
     * vertices. Variables are chosen by smallest remaining domain, ties by
     * smallest identifier, and values are tried in ascending order, so a given
     * input and budget always produce the same outcome and witness.
     */
    auto solve_hom(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;
    auto solve_listhom(const ListHomInstance & inst, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;
    auto solve_li_hom(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;
    auto solve_si(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;

    /// Exactly solve_hom(g, K_k).
    auto solve_kcol(const SimpleGraph & g, int k, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;

    auto solve(const ProblemInstance & instance, const SolveBudget & b = {}, const SolveOptions & o = {}) -> SolveOutcome;
}

#endif
