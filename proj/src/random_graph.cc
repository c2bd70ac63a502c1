/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/random_graph.hh>

#include <limits>
#include <optional>
#include <set>
#include <string>

using std::set;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace homred
{
    namespace
    {
        constexpr int attempt_budget = 64;

        auto try_once(const RandomSpec & spec, std::mt19937_64 & rng) -> std::optional<SimpleGraph>
        {
            const int n = spec.n;
            vector<int> degree(n, 0);
            set<Edge> edges;

            auto add = [&] (int u, int v) {
                if (u == v || degree[u] >= spec.max_deg || degree[v] >= spec.max_deg)
                    return;
                if (edges.emplace(std::min(u, v), std::max(u, v)).second) {
                    ++degree[u];
                    ++degree[v];
                }
            };

            const uint64_t proposals = 2ULL * n * spec.max_deg;
            for (uint64_t i = 0 ; i < proposals ; ++i) {
                int u = static_cast<int>(bounded_draw(rng, n));
                int v = static_cast<int>(bounded_draw(rng, n));
                add(u, v);
            }

            for (int v = 0 ; v < n ; ++v) {
                if (degree[v] > 0)
                    continue;
                vector<int> room;
                for (int w = 0 ; w < n ; ++w)
                    if (w != v && degree[w] < spec.max_deg)
                        room.push_back(w);
                if (room.empty())
                    return std::nullopt;
                add(v, room[bounded_draw(rng, room.size())]);
            }

            vector<Edge> list(edges.begin(), edges.end());
            return SimpleGraph::from_edges(n, list);
        }
    }

    auto bounded_draw(std::mt19937_64 & rng, uint64_t bound) -> uint64_t
    {
        // rejection sampling keeps the result independent of library distribution code
        const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
        while (true) {
            uint64_t x = rng();
            if (x < limit)
                return x % bound;
        }
    }

    auto random_graph(const RandomSpec & spec) -> SimpleGraph
    {
        if (spec.max_deg < 1)
            throw GenerationFailed{ "max_deg must be at least 1" };
        if (spec.n < 2)
            throw GenerationFailed{ "a graph on " + to_string(spec.n) + " vertices cannot avoid isolated vertices" };

        std::mt19937_64 rng{ spec.seed };
        for (int attempt = 0 ; attempt < attempt_budget ; ++attempt)
            if (auto g = try_once(spec, rng))
                return *g;

        throw GenerationFailed{ "no graph without isolated vertices after " + to_string(attempt_budget) + " attempts" };
    }

    auto random_gnp(int n, uint64_t numerator, uint64_t denominator, std::mt19937_64 & rng) -> SimpleGraph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (bounded_draw(rng, denominator) < numerator)
                    edges.emplace_back(u, v);
        return SimpleGraph::from_edges(n, edges);
    }

    auto random_lists(int pattern_size, int target_size, std::mt19937_64 & rng) -> Lists
    {
        Lists result(pattern_size);
        for (auto & l : result)
            for (int t = 0 ; t < target_size ; ++t)
                if (bounded_draw(rng, 2))
                    l.push_back(t);
        return result;
    }
}
