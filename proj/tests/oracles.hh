/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_TESTS_ORACLES_HH
#define HOMRED_GUARD_TESTS_ORACLES_HH 1

// Slow, obviously correct reference implementations. None of these call into
// the library except for SimpleGraph accessors, so they can be used to check it.

#include <homred/graph.hh>
#include <homred/instances.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle
{
    using homred::SimpleGraph;

    inline auto adjacency_matrix(const SimpleGraph & g) -> std::vector<std::vector<bool>>
    {
        std::vector<std::vector<bool>> m(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            for (int u : g.neighbours(v))
                m[v][u] = true;
        return m;
    }

    /// All-pairs distances by repeated relaxation; -1 for unreachable.
    inline auto distances(const SimpleGraph & g) -> std::vector<std::vector<int>>
    {
        const int n = g.vertex_count();
        const int inf = n + 1;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int v = 0 ; v < n ; ++v) {
            d[v][v] = 0;
            for (int u : g.neighbours(v))
                d[v][u] = 1;
        }
        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        for (auto & row : d)
            for (auto & x : row)
                if (x == inf)
                    x = -1;
        return d;
    }

    /// Edge set of the square, as ordered pairs u < v.
    inline auto square_edges(const SimpleGraph & g) -> std::set<std::pair<int, int>>
    {
        auto d = distances(g);
        std::set<std::pair<int, int>> result;
        for (int u = 0 ; u < g.vertex_count() ; ++u)
            for (int v = u + 1 ; v < g.vertex_count() ; ++v)
                if (d[u][v] == 1 || d[u][v] == 2)
                    result.emplace(u, v);
        return result;
    }

    /// Calls visit with every map from n points to 0 .. m-1, in lexicographic order; stops when visit returns false.
    inline auto for_each_map(int n, int m, const std::function<auto (const std::vector<int> &) -> bool> & visit) -> void
    {
        std::vector<int> f(n, 0);
        if (n > 0 && m == 0)
            return;
        while (true) {
            if (! visit(f))
                return;
            int i = n - 1;
            while (i >= 0 && f[i] == m - 1)
                f[i--] = 0;
            if (i < 0)
                return;
            ++f[i];
        }
    }

    enum class Kind
    {
        hom,
        listhom,
        lihom,
        si
    };

    /// The defining conditions of one instance, checked directly on adjacency matrices built once.
    class Conditions
    {
        private:
            Kind _kind;
            std::vector<std::vector<bool>> _g, _h;
            std::vector<std::vector<bool>> _allowed;
            std::vector<std::pair<int, int>> _edges, _distinct;

        public:
            Conditions(Kind kind, const SimpleGraph & g, const SimpleGraph & h, const homred::Lists & lists) :
                _kind(kind), _g(adjacency_matrix(g)), _h(adjacency_matrix(h))
            {
                const int n = g.vertex_count();
                for (int u = 0 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v)
                        if (_g[u][v])
                            _edges.emplace_back(u, v);

                if (kind == Kind::listhom) {
                    _allowed.assign(n, std::vector<bool>(h.vertex_count(), false));
                    for (int v = 0 ; v < n ; ++v)
                        for (int t : lists[v])
                            _allowed[v][t] = true;
                }

                for (int u = 0 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v) {
                        bool common = false;
                        for (int w = 0 ; w < n ; ++w)
                            common = common || (_g[w][u] && _g[w][v]);
                        if (kind == Kind::si || (kind == Kind::lihom && common))
                            _distinct.emplace_back(u, v);
                    }
            }

            auto operator() (const std::vector<int> & f) const -> bool
            {
                for (auto & [u, v] : _edges)
                    if (! _h[f[u]][f[v]])
                        return false;
                for (auto & [u, v] : _distinct)
                    if (f[u] == f[v])
                        return false;
                if (_kind == Kind::listhom)
                    for (std::size_t v = 0 ; v < f.size() ; ++v)
                        if (! _allowed[v][f[v]])
                            return false;
                return true;
            }
    };

    inline auto satisfies(Kind kind, const SimpleGraph & g, const SimpleGraph & h, const homred::Lists & lists,
            const std::vector<int> & f) -> bool
    {
        return Conditions{ kind, g, h, lists }(f);
    }

    inline auto count(Kind kind, const SimpleGraph & g, const SimpleGraph & h, const homred::Lists & lists = {}) -> std::uint64_t
    {
        Conditions ok{ kind, g, h, lists };
        std::uint64_t total = 0;
        for_each_map(g.vertex_count(), h.vertex_count(), [&] (const std::vector<int> & f) {
            if (ok(f))
                ++total;
            return true;
        });
        return total;
    }

    inline auto exists(Kind kind, const SimpleGraph & g, const SimpleGraph & h, const homred::Lists & lists = {}) -> bool
    {
        Conditions ok{ kind, g, h, lists };
        bool found = false;
        for_each_map(g.vertex_count(), h.vertex_count(), [&] (const std::vector<int> & f) {
            found = ok(f);
            return ! found;
        });
        return found;
    }

    /// Every proper k-colouring tried, colours 0 .. k-1.
    inline auto colourable(const SimpleGraph & g, int k) -> bool
    {
        bool found = false;
        auto edges = g.edges();
        for_each_map(g.vertex_count(), k, [&] (const std::vector<int> & f) {
            found = std::all_of(edges.begin(), edges.end(), [&] (auto & e) { return f[e.first] != f[e.second]; });
            return ! found;
        });
        return found;
    }

    /// Pascal's triangle, exact for the small arguments used in tests.
    inline auto binomial(int n, int k) -> std::uint64_t
    {
        if (k < 0 || k > n)
            return 0;
        std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
        for (int i = 0 ; i <= n ; ++i) {
            c[i][0] = 1;
            for (int j = 1 ; j <= i ; ++j)
                c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
        return c[n][k];
    }

    /// Number of sequences of m non-negative integers summing to n, by direct enumeration.
    inline auto compositions(int n, int m) -> std::uint64_t
    {
        std::uint64_t total = 0;
        for_each_map(m, n + 1, [&] (const std::vector<int> & a) {
            int s = 0;
            for (int x : a)
                s += x;
            if (s == n)
                ++total;
            return true;
        });
        return total;
    }

    /// Pairs of vertices of class `colour` joined by the constraint-graph rule, straight from the definition.
    inline auto constraint_pairs(const SimpleGraph & g, const std::vector<int> & c, int colour) -> std::set<std::pair<int, int>>
    {
        std::set<std::pair<int, int>> result;
        for (int u = 0 ; u < g.vertex_count() ; ++u)
            for (int v = u + 1 ; v < g.vertex_count() ; ++v) {
                if (c[u] != colour || c[v] != colour)
                    continue;
                bool joined = false;
                for (int x : g.neighbours(u))
                    for (int y : g.neighbours(v))
                        if (c[x] == c[y])
                            joined = true;
                if (joined)
                    result.emplace(u, v);
            }
        return result;
    }

    inline auto is_independent(const SimpleGraph & g, const std::vector<int> & vs) -> bool
    {
        for (int u : vs)
            for (int v : vs)
                if (u != v && g.adjacent(u, v))
                    return false;
        return true;
    }
}

#endif
