/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/graph.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::make_shared;
using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace homred
{
    SimpleGraph::SimpleGraph() :
        _data(make_shared<const Data>())
    {
    }

    SimpleGraph::SimpleGraph(std::shared_ptr<const Data> data) :
        _data(std::move(data))
    {
    }

    auto SimpleGraph::from_edges(int vertex_count, span<const Edge> edges) -> SimpleGraph
    {
        if (vertex_count < 0)
            throw InvalidGraph{ "negative vertex count" };

        vector<int> degrees(vertex_count, 0);
        for (auto & [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw InvalidGraph{ "edge " + to_string(u) + " " + to_string(v) + " has an endpoint outside the vertex range" };
            if (u == v)
                throw InvalidGraph{ "loop on vertex " + to_string(u) };
            ++degrees[u];
            ++degrees[v];
        }

        auto data = make_shared<Data>();
        data->vertex_count = vertex_count;
        data->offsets.assign(vertex_count + 1, 0);
        for (int v = 0 ; v < vertex_count ; ++v)
            data->offsets[v + 1] = data->offsets[v] + degrees[v];

        data->neighbours.resize(data->offsets[vertex_count]);
        vector<int> fill(data->offsets.begin(), data->offsets.end() - 1);
        for (auto & [u, v] : edges) {
            data->neighbours[fill[u]++] = v;
            data->neighbours[fill[v]++] = u;
        }

        // sort each list and squeeze out repeats
        vector<int> new_offsets(vertex_count + 1, 0);
        int write = 0;
        for (int v = 0 ; v < vertex_count ; ++v) {
            auto first = data->neighbours.begin() + data->offsets[v], last = data->neighbours.begin() + data->offsets[v + 1];
            std::sort(first, last);
            auto unique_end = std::unique(first, last);
            new_offsets[v] = write;
            for (auto i = first ; i != unique_end ; ++i)
                data->neighbours[write++] = *i;
        }
        new_offsets[vertex_count] = write;
        data->neighbours.resize(write);
        data->neighbours.shrink_to_fit();
        data->offsets = std::move(new_offsets);

        return SimpleGraph{ std::move(data) };
    }

    auto SimpleGraph::adjacent(int u, int v) const -> bool
    {
        auto n = neighbours(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

    auto SimpleGraph::max_degree() const -> int
    {
        int result = 0;
        for (int v = 0 ; v < vertex_count() ; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto SimpleGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(edge_count());
        for (int u = 0 ; u < vertex_count() ; ++u)
            for (int v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto SimpleGraph::operator== (const SimpleGraph & other) const -> bool
    {
        return _data == other._data || (_data->vertex_count == other._data->vertex_count
                && _data->offsets == other._data->offsets && _data->neighbours == other._data->neighbours);
    }

    Coloring::Coloring(int color_count, vector<int> colors) :
        _color_count(color_count),
        _colors(std::move(colors))
    {
        if (_color_count < 1)
            throw InvalidGraph{ "a colouring needs at least one colour" };
        for (int c : _colors)
            if (c < 1 || c > _color_count)
                throw InvalidGraph{ "colour " + to_string(c) + " outside 1.." + to_string(_color_count) };
    }

    auto Coloring::classes() const -> vector<vector<int>>
    {
        vector<vector<int>> result(_color_count);
        for (int v = 0 ; v < size() ; ++v)
            result[_colors[v] - 1].push_back(v);
        return result;
    }

    auto is_proper(const SimpleGraph & g, const Coloring & c) -> bool
    {
        if (c.size() != g.vertex_count())
            return false;
        for (auto & [u, v] : g.edges())
            if (c[u] == c[v])
                return false;
        return true;
    }

    auto square(const SimpleGraph & g) -> SimpleGraph
    {
        vector<Edge> edges;
        vector<int> seen_at(g.vertex_count(), -1);
        for (int v = 0 ; v < g.vertex_count() ; ++v) {
            seen_at[v] = v;
            for (int u : g.neighbours(v)) {
                if (seen_at[u] != v) {
                    seen_at[u] = v;
                    if (v < u)
                        edges.emplace_back(v, u);
                }
                for (int w : g.neighbours(u))
                    if (seen_at[w] != v) {
                        seen_at[w] = v;
                        if (v < w)
                            edges.emplace_back(v, w);
                    }
            }
        }
        return SimpleGraph::from_edges(g.vertex_count(), edges);
    }

    auto greedy_coloring(const SimpleGraph & g, span<const int> order) -> Coloring
    {
        if (static_cast<int>(order.size()) != g.vertex_count())
            throw InvalidGraph{ "colouring order is not a permutation of the vertices" };

        vector<int> colors(g.vertex_count(), 0);
        vector<int> seen_at(g.max_degree() + 2, -1);
        int used = 0;
        for (int v : order) {
            if (v < 0 || v >= g.vertex_count() || colors[v] != 0)
                throw InvalidGraph{ "colouring order is not a permutation of the vertices" };
            for (int u : g.neighbours(v))
                if (colors[u] != 0)
                    seen_at[colors[u]] = v;
            int c = 1;
            while (seen_at[c] == v)
                ++c;
            colors[v] = c;
            used = std::max(used, c);
        }

        return Coloring{ std::max(used, 1), std::move(colors) };
    }

    auto greedy_coloring(const SimpleGraph & g) -> Coloring
    {
        vector<int> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        return greedy_coloring(g, order);
    }

    auto greedy_independent_set(const SimpleGraph & g, int target) -> vector<int>
    {
        if (target < 0)
            throw TargetUnreachable{ "negative independent set target" };

        vector<int> result;
        vector<bool> excluded(g.vertex_count(), false);
        for (int v = 0 ; v < g.vertex_count() && static_cast<int>(result.size()) < target ; ++v) {
            if (excluded[v])
                continue;
            result.push_back(v);
            excluded[v] = true;
            for (int u : g.neighbours(v))
                excluded[u] = true;
        }

        if (static_cast<int>(result.size()) < target)
            throw TargetUnreachable{ "greedy exclusion found only " + to_string(result.size()) + " of " + to_string(target) + " vertices" };

        return result;
    }

    auto assemble(
            span<const SimpleGraph> parts,
            span<const pair<Handle, Handle>> identifications,
            span<const pair<Handle, Handle>> extra_edges) -> Assembly
    {
        vector<int> part_offset(parts.size() + 1, 0);
        for (std::size_t p = 0 ; p < parts.size() ; ++p)
            part_offset[p + 1] = part_offset[p] + parts[p].vertex_count();

        auto flat = [&] (const Handle & h) -> int {
            if (h.part < 0 || h.part >= static_cast<int>(parts.size())
                    || h.vertex < 0 || h.vertex >= parts[h.part].vertex_count())
                throw InvalidHandle{ "handle (" + to_string(h.part) + ", " + to_string(h.vertex) + ") does not name a vertex" };
            return part_offset[h.part] + h.vertex;
        };

        // union-find keyed on the flat handle index; the smaller index is the root
        vector<int> parent(part_offset.back());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };

        for (auto & [a, b] : identifications) {
            int ra = find(flat(a)), rb = find(flat(b));
            if (ra != rb)
                parent[std::max(ra, rb)] = std::min(ra, rb);
        }

        vector<int> final_id(parent.size(), -1);
        int next_id = 0;
        for (std::size_t x = 0 ; x < parent.size() ; ++x) {
            int r = find(static_cast<int>(x));
            if (final_id[r] == -1)
                final_id[r] = next_id++;
            final_id[x] = final_id[r];
        }

        vector<Edge> edges;
        auto add = [&] (int a, int b) {
            if (a == b)
                throw SelfLoopProduced{ "assembly merges the two endpoints of an edge into vertex " + to_string(a) };
            edges.emplace_back(std::min(a, b), std::max(a, b));
        };

        for (std::size_t p = 0 ; p < parts.size() ; ++p)
            for (auto & [u, v] : parts[p].edges())
                add(final_id[part_offset[p] + u], final_id[part_offset[p] + v]);
        for (auto & [a, b] : extra_edges)
            add(final_id[flat(a)], final_id[flat(b)]);

        Assembly result;
        result.graph = SimpleGraph::from_edges(next_id, edges);
        result.handle_map.resize(parts.size());
        for (std::size_t p = 0 ; p < parts.size() ; ++p)
            for (int v = 0 ; v < parts[p].vertex_count() ; ++v)
                result.handle_map[p].push_back(final_id[part_offset[p] + v]);
        return result;
    }

    auto complete_graph(int n) -> SimpleGraph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return SimpleGraph::from_edges(n, edges);
    }

    auto edgeless_graph(int n) -> SimpleGraph
    {
        return SimpleGraph::from_edges(n, {});
    }

    auto cycle_graph(int n) -> SimpleGraph
    {
        if (n < 3)
            throw InvalidGraph{ "a cycle needs at least three vertices" };
        vector<Edge> edges;
        for (int v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return SimpleGraph::from_edges(n, edges);
    }

    auto path_graph(int n) -> SimpleGraph
    {
        vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return SimpleGraph::from_edges(n, edges);
    }

    auto petersen_graph() -> SimpleGraph
    {
        vector<Edge> edges;
        for (int i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return SimpleGraph::from_edges(10, edges);
    }
}
