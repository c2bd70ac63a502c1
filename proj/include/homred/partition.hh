/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_PARTITION_HH
#define HOMRED_GUARD_PARTITION_HH 1

#include <homred/graph.hh>

#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace homred
{
    using Rational = boost::rational<long long>;

    /// Smallest integer not below a non-negative rational.
    auto ceil_of(const Rational & q) -> long long;

    /**
     * Constants for the balanced colouring and the grouping built on it.
     *
     * Strict mode enforces the admissible window for the number of colours
     * (tau <= L <= n(d^2-1)/(2d^2(d^2+1)) for the colouring, 2 lambda r^2 <= n
     * and L = lambda r for the grouping). Relaxed mode runs the same greedy
     * construction on whatever L it is given and leaves the guarantees to the
     * post-hoc verifiers.
     */
    struct BalanceParams
    {
        int degree = 4;
        Rational alpha{ 4 };
        Rational beta{ 16 * 16 * 256 };
        Rational tau{ 16 * 17, 11 };
        Rational lambda{ 2 * 4 * 16 * 16 * 256 };
        bool strict = true;

        /// Explicit colour count for relaxed grouping; unset means search upwards for one that works.
        std::optional<int> colors;

        /// alpha = 4, beta = 16 alpha^2 d^4, tau = 16(d^2+1)/11, lambda = 2 d beta.
        static auto full_scale(int degree) -> BalanceParams;

        static auto relaxed(int degree, Rational alpha, Rational beta, std::optional<int> colors = std::nullopt) -> BalanceParams;
    };

    /// The closed interval of admissible colour counts in strict mode; empty when first > second.
    auto color_window(int vertex_count, const BalanceParams & params) -> std::pair<long long, long long>;

    struct PairCount
    {
        int first_color;
        int second_color;
        long long edges;
        long long cap;
    };

    struct BalanceReport
    {
        std::vector<long long> class_sizes;
        long long class_cap = 0;
        /// Every colour pair with at least one edge between its classes, ordered by (first, second), first < second.
        std::vector<PairCount> pairs;

        bool proper_on_square = false;
        bool class_sizes_bounded = false;
        bool pair_edges_bounded = false;

        auto all_pass() const -> bool { return proper_on_square && class_sizes_bounded && pair_edges_bounded; }
    };

    /**
     * Colour g with L colours so that the colouring is proper on the square of
     * g, no class exceeds ceil(alpha n / L), and no two classes i, j have more
     * than ceil(beta min(|i|, |j|) / L) edges between them.
     *
     * Throws WindowEmpty in strict mode when L is not admissible, InvalidGraph
     * when g exceeds the degree bound, and NoVacantColor if the greedy
     * extension gets stuck.
     */
    auto balanced_coloring(const SimpleGraph & g, int colors, const BalanceParams & params) -> Coloring;

    auto verify_balanced(const SimpleGraph & g, const Coloring & c, const BalanceParams & params) -> BalanceReport;

    /// True iff adjacent vertices differ and every neighbourhood is rainbow.
    auto proper_on_square(const SimpleGraph & g, const std::vector<int> & colors) -> bool;

    struct ConstraintGraph
    {
        /// The colour class, ascending; vertex k of graph stands for vertices[k].
        std::vector<int> vertices;
        SimpleGraph graph;
    };

    /// Joins two vertices of colour class i when some neighbour of one shares a colour with some neighbour of the other.
    auto constraint_graph(const SimpleGraph & g, const Coloring & c, int color) -> ConstraintGraph;

    /// A partition of a graph into buckets, the quotient over them, and a label per bucket.
    struct GroupedGraph
    {
        SimpleGraph base;
        std::vector<std::vector<int>> buckets;
        std::vector<int> bucket_of;
        SimpleGraph quotient;
        Coloring labels;

        /// Builds the quotient and bucket index. Throws InvalidGraph if buckets do not partition the vertices.
        static auto from_buckets(SimpleGraph base, std::vector<std::vector<int>> buckets, Coloring labels) -> GroupedGraph;

        /// Each base vertex coloured with its bucket's label.
        auto vertex_coloring() const -> Coloring;
    };

    /**
     * Balanced colouring with L = lambda r colours (or the relaxed choice of
     * L), then each colour class split into the colour classes of a greedy
     * colouring of its constraint graph; every such class becomes a bucket.
     */
    auto grouping(const SimpleGraph & g, int group_size, const BalanceParams & params) -> GroupedGraph;

    struct GroupingReport
    {
        long long bucket_count = 0;
        bool bucket_count_bounded = false;
        bool labels_proper_on_square = false;
        bool buckets_independent = false;
        bool one_edge_between_buckets = false;

        auto structural_pass() const -> bool { return labels_proper_on_square && buckets_independent && one_edge_between_buckets; }
        auto all_pass() const -> bool { return bucket_count_bounded && structural_pass(); }
    };

    auto verify_grouping(const GroupedGraph & gg, int group_size) -> GroupingReport;
}

#endif
