/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_RANDOM_GRAPH_HH
#define HOMRED_GUARD_RANDOM_GRAPH_HH 1

#include <homred/graph.hh>
#include <homred/instances.hh>

#include <cstdint>
#include <random>

namespace homred
{
    struct RandomSpec
    {
        int n = 0;
        int max_deg = 1;
        std::uint64_t seed = 0;
    };

    /**
     * Uniform edge proposals under the degree cap, followed by attaching any
     * isolated vertex to a random vertex that still has room. Attempts that
     * leave an isolated vertex are redrawn; after a fixed number of attempts
     * GenerationFailed is thrown. The same spec always gives the same graph.
     */
    auto random_graph(const RandomSpec & spec) -> SimpleGraph;

    /// Uniform value in 0 .. bound-1, computed the same way on every platform.
    auto bounded_draw(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t;

    /// Each pair becomes an edge with probability numerator/denominator; isolated vertices allowed.
    auto random_gnp(int n, std::uint64_t numerator, std::uint64_t denominator, std::mt19937_64 & rng) -> SimpleGraph;

    /// Each target vertex enters each list independently with probability one half.
    auto random_lists(int pattern_size, int target_size, std::mt19937_64 & rng) -> Lists;
}

#endif
