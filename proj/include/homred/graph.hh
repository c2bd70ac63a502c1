/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_GRAPH_HH
#define HOMRED_GUARD_GRAPH_HH 1

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace homred
{
    /// An unordered vertex pair, stored with first < second once inside a graph.
    using Edge = std::pair<int, int>;

    /**
     * Immutable undirected simple graph on vertices 0 .. n-1.
     *
     * Adjacency is kept in compressed form with every neighbour list sorted
     * ascending. The storage is shared between copies, so passing graphs by
     * value is cheap and safe across threads.
     */
    class SimpleGraph
    {
        private:
            struct Data
            {
                int vertex_count = 0;
                std::vector<int> offsets{ 0 };
                std::vector<int> neighbours;
            };

            std::shared_ptr<const Data> _data;

            explicit SimpleGraph(std::shared_ptr<const Data> data);

        public:
            /// The graph with no vertices.
            SimpleGraph();

            /**
             * Build from an edge list. Repeated edges collapse into one, since
             * the edge set is a set. Throws InvalidGraph on loops or on
             * endpoints outside 0 .. n-1.
             */
            static auto from_edges(int vertex_count, std::span<const Edge> edges) -> SimpleGraph;

            auto vertex_count() const -> int { return _data->vertex_count; }
            auto edge_count() const -> long long { return static_cast<long long>(_data->neighbours.size()) / 2; }

            auto degree(int v) const -> int
            {
                return _data->offsets[v + 1] - _data->offsets[v];
            }

            auto neighbours(int v) const -> std::span<const int>
            {
                return { _data->neighbours.data() + _data->offsets[v], _data->neighbours.data() + _data->offsets[v + 1] };
            }

            auto adjacent(int u, int v) const -> bool;
            auto max_degree() const -> int;

            /// All edges as (u, v) with u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;

            auto operator== (const SimpleGraph & other) const -> bool;
    };

    /**
     * A total map from vertices to colours 1 .. colour_count. Whether it is
     * proper is a property of a (graph, colouring) pair and is never implied.
     */
    class Coloring
    {
        private:
            int _color_count = 1;
            std::vector<int> _colors;

        public:
            Coloring() = default;

            /// Throws InvalidGraph if any entry falls outside 1 .. color_count.
            Coloring(int color_count, std::vector<int> colors);

            auto color_count() const -> int { return _color_count; }
            auto size() const -> int { return static_cast<int>(_colors.size()); }
            auto operator[] (int v) const -> int { return _colors[v]; }
            auto colors() const -> const std::vector<int> & { return _colors; }

            /// Vertices of each colour, indexed by colour - 1, each list ascending.
            auto classes() const -> std::vector<std::vector<int>>;

            auto operator== (const Coloring &) const -> bool = default;
    };

    /// A total vertex map from a pattern graph into a target graph.
    struct Witness
    {
        std::vector<int> mapping;

        auto operator== (const Witness &) const -> bool = default;
        auto operator<=> (const Witness &) const = default;
    };

    auto is_proper(const SimpleGraph & g, const Coloring & c) -> bool;

    /// Vertices joined iff distinct and at distance at most two.
    auto square(const SimpleGraph & g) -> SimpleGraph;

    /**
     * Visit vertices in the given order and give each the smallest colour not
     * used by an already coloured neighbour. Uses at most max_degree + 1
     * colours; color_count of the result is the largest colour used.
     */
    auto greedy_coloring(const SimpleGraph & g, std::span<const int> order) -> Coloring;
    auto greedy_coloring(const SimpleGraph & g) -> Coloring;

    /**
     * Repeatedly take the smallest vertex not yet excluded and exclude its
     * closed neighbourhood, stopping once target vertices are taken. Throws
     * TargetUnreachable if the vertices run out first.
     */
    auto greedy_independent_set(const SimpleGraph & g, int target) -> std::vector<int>;

    /// A vertex of one of the parts handed to assemble().
    struct Handle
    {
        int part;
        int vertex;
    };

    struct Assembly
    {
        SimpleGraph graph;
        /// handle_map[part][vertex] is the final identifier of that handle.
        std::vector<std::vector<int>> handle_map;
    };

    /**
     * Disjoint union of the parts, with each identification pair merged into
     * one vertex and the extra edges added. Final identifiers are allocated in
     * order of first appearance, scanning parts in order and each part's
     * vertices ascending; a merged vertex takes the identifier of its first
     * handle. Throws InvalidHandle for a handle outside its part, and
     * SelfLoopProduced if merging or an extra edge would create a loop.
     */
    auto assemble(
            std::span<const SimpleGraph> parts,
            std::span<const std::pair<Handle, Handle>> identifications,
            std::span<const std::pair<Handle, Handle>> extra_edges) -> Assembly;

    auto complete_graph(int n) -> SimpleGraph;
    auto edgeless_graph(int n) -> SimpleGraph;
    auto cycle_graph(int n) -> SimpleGraph;
    /// Path on n vertices 0 - 1 - ... - n-1.
    auto path_graph(int n) -> SimpleGraph;
    auto petersen_graph() -> SimpleGraph;
}

#endif
