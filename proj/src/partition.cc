/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/partition.hh>

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

using std::optional;
using std::pair;
using std::to_string;
using std::vector;

namespace homred
{
    namespace
    {
        auto pair_key(int i, int j) -> std::uint64_t
        {
            if (i > j)
                std::swap(i, j);
            return (std::uint64_t(unsigned(i)) << 32) | unsigned(j);
        }

        auto ceil_ratio(const Rational & coefficient, long long numerator, long long denominator) -> long long
        {
            return ceil_of(coefficient * Rational{ numerator, denominator });
        }

        /// Greedy independent set of the square of g, without building the square.
        auto distance_two_independent_set(const SimpleGraph & g, int target) -> vector<int>
        {
            vector<int> result;
            vector<bool> excluded(g.vertex_count(), false);
            for (int v = 0 ; v < g.vertex_count() && static_cast<int>(result.size()) < target ; ++v) {
                if (excluded[v])
                    continue;
                result.push_back(v);
                excluded[v] = true;
                for (int u : g.neighbours(v)) {
                    excluded[u] = true;
                    for (int w : g.neighbours(u))
                        excluded[w] = true;
                }
            }
            if (static_cast<int>(result.size()) < target)
                throw TargetUnreachable{ "square of the graph has no greedy independent set of size " + to_string(target) };
            return result;
        }

        /// Smallest colour >= i whose class still has room; colours that fill up are skipped forever after.
        class OpenColors
        {
            private:
                vector<int> _next;

            public:
                explicit OpenColors(int colors) :
                    _next(colors + 2)
                {
                    std::iota(_next.begin(), _next.end(), 0);
                }

                auto find(int i) -> int
                {
                    int root = i;
                    while (_next[root] != root)
                        root = _next[root];
                    while (_next[i] != root) {
                        int up = _next[i];
                        _next[i] = root;
                        i = up;
                    }
                    return root;
                }

                auto close(int i) -> void
                {
                    _next[i] = i + 1;
                }
        };

        auto check_strict_window(int n, int colors, const BalanceParams & params) -> void
        {
            auto [low, high] = color_window(n, params);
            if (colors < low || colors > high)
                throw WindowEmpty{ "colour count " + to_string(colors) + " outside the admissible window [" + to_string(low)
                    + ", " + to_string(high) + "] for n = " + to_string(n) + (low > high ? " (window is empty)" : "") };
        }
    }

    auto ceil_of(const Rational & q) -> long long
    {
        auto num = q.numerator(), den = q.denominator();
        if (num >= 0)
            return (num + den - 1) / den;
        return -((-num) / den);
    }

    auto BalanceParams::full_scale(int degree) -> BalanceParams
    {
        BalanceParams result;
        long long d = degree, d2 = d * d;
        result.degree = degree;
        result.alpha = 4;
        result.beta = 16 * 16 * d2 * d2;
        result.tau = Rational{ 16 * (d2 + 1), 11 };
        result.lambda = 2 * d * result.beta;
        result.strict = true;
        return result;
    }

    auto BalanceParams::relaxed(int degree, Rational alpha, Rational beta, optional<int> colors) -> BalanceParams
    {
        BalanceParams result = full_scale(degree);
        result.alpha = alpha;
        result.beta = beta;
        result.lambda = 2 * static_cast<long long>(degree) * beta;
        result.strict = false;
        result.colors = colors;
        return result;
    }

    auto color_window(int vertex_count, const BalanceParams & params) -> pair<long long, long long>
    {
        long long d2 = static_cast<long long>(params.degree) * params.degree;
        long long upper = static_cast<long long>(vertex_count) * (d2 - 1) / (2 * d2 * (d2 + 1));
        return { ceil_of(params.tau), upper };
    }

    auto balanced_coloring(const SimpleGraph & g, int colors, const BalanceParams & params) -> Coloring
    {
        const int n = g.vertex_count();
        const long long d = params.degree;

        if (colors < 1)
            throw WindowEmpty{ "at least one colour is needed" };
        if (g.max_degree() > params.degree)
            throw InvalidGraph{ "graph has maximum degree " + to_string(g.max_degree()) + " above the bound " + to_string(params.degree) };
        if (params.strict)
            check_strict_window(n, colors, params);

        vector<int> color(n, 0);
        vector<long long> class_size(colors + 1, 0);
        std::unordered_map<std::uint64_t, long long> pair_edges;
        const long long class_cap = ceil_ratio(params.alpha, n, colors);
        OpenColors open(colors);

        auto pair_cap = [&] (long long size_i, long long size_j) {
            return ceil_ratio(params.beta, std::min(size_i, size_j), colors);
        };

        auto place = [&] (int v, int c) {
            color[v] = c;
            if (++class_size[c] >= class_cap)
                open.close(c);
            for (int u : g.neighbours(v))
                if (color[u] != 0)
                    ++pair_edges[pair_key(c, color[u])];
        };

        // equitable precolouring of an independent set of the square, round robin in ascending order
        auto independent = distance_two_independent_set(g, static_cast<int>((n + d * d) / (d * d + 1)));
        for (std::size_t k = 0 ; k < independent.size() ; ++k)
            place(independent[k], static_cast<int>(k % colors) + 1);

        vector<int> near_stamp(colors + 1, -1);
        for (int v = 0 ; v < n ; ++v) {
            if (color[v] != 0)
                continue;

            for (int u : g.neighbours(v)) {
                if (color[u] != 0)
                    near_stamp[color[u]] = v;
                for (int w : g.neighbours(u))
                    if (w != v && color[w] != 0)
                        near_stamp[color[w]] = v;
            }

            int chosen = 0;
            for (int c = open.find(1) ; c <= colors ; c = open.find(c + 1)) {
                if (near_stamp[c] == v)
                    continue;

                bool fits = true;
                for (int u : g.neighbours(v)) {
                    if (color[u] == 0)
                        continue;
                    // neighbours of v carry distinct colours, so each pair gains exactly one edge
                    auto existing = pair_edges.find(pair_key(c, color[u]));
                    long long count = existing == pair_edges.end() ? 0 : existing->second;
                    if (count + 1 > pair_cap(class_size[c] + 1, class_size[color[u]])) {
                        fits = false;
                        break;
                    }
                }

                if (fits) {
                    chosen = c;
                    break;
                }
            }

            if (0 == chosen)
                throw NoVacantColor{ v, "no colour satisfies all three constraints for vertex " + to_string(v) };
            place(v, chosen);
        }

        return Coloring{ colors, std::move(color) };
    }

    auto proper_on_square(const SimpleGraph & g, const vector<int> & colors) -> bool
    {
        vector<int> stamp;
        for (int c : colors)
            if (c >= static_cast<int>(stamp.size()))
                stamp.resize(c + 1, -1);

        for (int v = 0 ; v < g.vertex_count() ; ++v) {
            stamp[colors[v]] = v;
            for (int u : g.neighbours(v)) {
                if (stamp[colors[u]] == v)
                    return false;
                stamp[colors[u]] = v;
            }
        }
        return true;
    }

    auto verify_balanced(const SimpleGraph & g, const Coloring & c, const BalanceParams & params) -> BalanceReport
    {
        BalanceReport report;
        const int colors = c.color_count();
        report.class_sizes.assign(colors, 0);
        for (int v = 0 ; v < c.size() ; ++v)
            ++report.class_sizes[c[v] - 1];

        report.proper_on_square = c.size() == g.vertex_count() && proper_on_square(g, c.colors());

        report.class_cap = ceil_ratio(params.alpha, g.vertex_count(), colors);
        report.class_sizes_bounded = std::all_of(report.class_sizes.begin(), report.class_sizes.end(),
                [&] (long long s) { return s <= report.class_cap; });

        std::unordered_map<std::uint64_t, long long> counts;
        for (auto & [u, v] : g.edges())
            if (c[u] != c[v])
                ++counts[pair_key(c[u], c[v])];

        report.pair_edges_bounded = true;
        for (auto & [key, count] : counts) {
            int i = static_cast<int>(key >> 32), j = static_cast<int>(key & 0xffffffffu);
            long long cap = ceil_ratio(params.beta, std::min(report.class_sizes[i - 1], report.class_sizes[j - 1]), colors);
            report.pairs.push_back(PairCount{ i, j, count, cap });
            if (count > cap)
                report.pair_edges_bounded = false;
        }
        std::sort(report.pairs.begin(), report.pairs.end(), [] (const PairCount & a, const PairCount & b) {
                return pair{ a.first_color, a.second_color } < pair{ b.first_color, b.second_color }; });

        return report;
    }

    namespace
    {
        auto constraint_graph_on(const SimpleGraph & g, const Coloring & c, vector<int> members) -> ConstraintGraph
        {
            ConstraintGraph result;
            result.vertices = std::move(members);

            // group class members by the colours seen in their neighbourhoods
            std::unordered_map<int, vector<int>> by_neighbour_color;
            for (int k = 0 ; k < static_cast<int>(result.vertices.size()) ; ++k)
                for (int u : g.neighbours(result.vertices[k])) {
                    auto & l = by_neighbour_color[c[u]];
                    if (l.empty() || l.back() != k)
                        l.push_back(k);
                }

            vector<Edge> edges;
            for (auto & [_, members] : by_neighbour_color)
                for (std::size_t a = 0 ; a < members.size() ; ++a)
                    for (std::size_t b = a + 1 ; b < members.size() ; ++b)
                        edges.emplace_back(members[a], members[b]);

            result.graph = SimpleGraph::from_edges(static_cast<int>(result.vertices.size()), edges);
            return result;
        }
    }

    auto constraint_graph(const SimpleGraph & g, const Coloring & c, int color) -> ConstraintGraph
    {
        vector<int> members;
        for (int v = 0 ; v < c.size() ; ++v)
            if (c[v] == color)
                members.push_back(v);
        return constraint_graph_on(g, c, std::move(members));
    }

    auto GroupedGraph::from_buckets(SimpleGraph base, vector<vector<int>> buckets, Coloring labels) -> GroupedGraph
    {
        GroupedGraph result;
        result.bucket_of.assign(base.vertex_count(), -1);
        for (std::size_t b = 0 ; b < buckets.size() ; ++b) {
            std::sort(buckets[b].begin(), buckets[b].end());
            if (buckets[b].empty())
                throw InvalidGraph{ "bucket " + to_string(b) + " is empty" };
            for (int v : buckets[b]) {
                if (v < 0 || v >= base.vertex_count() || result.bucket_of[v] != -1)
                    throw InvalidGraph{ "buckets do not partition the vertices (vertex " + to_string(v) + ")" };
                result.bucket_of[v] = static_cast<int>(b);
            }
        }
        if (std::find(result.bucket_of.begin(), result.bucket_of.end(), -1) != result.bucket_of.end())
            throw InvalidGraph{ "buckets do not cover every vertex" };
        if (labels.size() != static_cast<int>(buckets.size()))
            throw InvalidGraph{ "one label per bucket is needed" };

        vector<Edge> quotient_edges;
        for (auto & [u, v] : base.edges())
            if (result.bucket_of[u] != result.bucket_of[v])
                quotient_edges.emplace_back(result.bucket_of[u], result.bucket_of[v]);

        result.quotient = SimpleGraph::from_edges(static_cast<int>(buckets.size()), quotient_edges);
        result.base = std::move(base);
        result.buckets = std::move(buckets);
        result.labels = std::move(labels);
        return result;
    }

    auto GroupedGraph::vertex_coloring() const -> Coloring
    {
        vector<int> colors(base.vertex_count());
        for (int v = 0 ; v < base.vertex_count() ; ++v)
            colors[v] = labels[bucket_of[v]];
        return Coloring{ labels.color_count(), std::move(colors) };
    }

    namespace
    {
        auto split_into_buckets(const SimpleGraph & g, const Coloring & c) -> GroupedGraph
        {
            vector<vector<int>> buckets;
            vector<int> labels;
            auto classes = c.classes();
            for (int i = 1 ; i <= c.color_count() ; ++i) {
                auto f = constraint_graph_on(g, c, std::move(classes[i - 1]));
                if (f.vertices.empty())
                    continue;
                auto split = greedy_coloring(f.graph);
                for (auto & cls : split.classes()) {
                    if (cls.empty())
                        continue;
                    vector<int> bucket;
                    for (int k : cls)
                        bucket.push_back(f.vertices[k]);
                    buckets.push_back(std::move(bucket));
                    labels.push_back(i);
                }
            }
            return GroupedGraph::from_buckets(g, std::move(buckets), Coloring{ c.color_count(), std::move(labels) });
        }
    }

    auto grouping(const SimpleGraph & g, int group_size, const BalanceParams & params) -> GroupedGraph
    {
        const int n = g.vertex_count();
        if (group_size < 1)
            throw WindowEmpty{ "group size must be at least one" };

        if (params.strict) {
            Rational colors_q = params.lambda * Rational{ group_size };
            if (colors_q * Rational{ 2LL * group_size } > Rational{ n })
                throw WindowEmpty{ "group size " + to_string(group_size) + " exceeds sqrt(n / (2 lambda)) for n = " + to_string(n) };
            int colors = static_cast<int>(colors_q.numerator() / colors_q.denominator());

            // only the grouping window applies here, L = lambda r need not sit inside the colouring window
            auto inner = params;
            inner.strict = false;
            auto gg = split_into_buckets(g, balanced_coloring(g, colors, inner));
            if (static_cast<long long>(gg.buckets.size()) * group_size > n)
                throw BucketBoundExceeded{ to_string(gg.buckets.size()) + " buckets exceeds n / r" };
            return gg;
        }

        if (params.colors)
            return split_into_buckets(g, balanced_coloring(g, *params.colors, params));

        // a closed neighbourhood is a clique of the square, so fewer colours never work
        for (int colors = g.max_degree() + 1 ; ; ++colors) {
            try {
                return split_into_buckets(g, balanced_coloring(g, colors, params));
            }
            catch (const NoVacantColor &) {
                if (colors >= std::max(n, 1))
                    throw;
            }
        }
    }

    auto verify_grouping(const GroupedGraph & gg, int group_size) -> GroupingReport
    {
        GroupingReport report;
        const auto & base = gg.base;
        report.bucket_count = static_cast<long long>(gg.buckets.size());
        report.bucket_count_bounded = report.bucket_count * group_size <= base.vertex_count();
        report.labels_proper_on_square = proper_on_square(gg.quotient, gg.labels.colors());

        report.buckets_independent = true;
        std::unordered_map<std::uint64_t, int> between;
        report.one_edge_between_buckets = true;
        for (auto & [u, v] : base.edges()) {
            int bu = gg.bucket_of[u], bv = gg.bucket_of[v];
            if (bu == bv)
                report.buckets_independent = false;
            else if (++between[pair_key(bu, bv)] > 1)
                report.one_edge_between_buckets = false;
        }

        return report;
    }
}
