/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/bitset.hh>
#include <homred/errors.hh>
#include <homred/solvers.hh>

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>
#include <string>

using std::pair;
using std::vector;

using std::chrono::steady_clock;

namespace homred
{
    namespace
    {
        // about 512 MiB of remembered failures
        constexpr std::size_t failure_cache_words = std::size_t{ 1 } << 26;

        auto saturating_sum(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
        }

        auto saturating_product(std::uint64_t a, std::uint64_t b) -> std::uint64_t
        {
            if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
                return std::numeric_limits<std::uint64_t>::max();
            return a * b;
        }

        /**
         * Domains with a trail, so backtracking restores only what changed
         * instead of copying every domain at every node.
         */
        class Domains
        {
            private:
                struct Saved
                {
                    int var;
                    int old_stamp;
                    Bitset old_domain;
                };

                vector<Bitset> _domains;
                vector<int> _stamp;
                vector<Saved> _trail;
                vector<std::size_t> _marks;
                int _epoch = 0;

            public:
                explicit Domains(vector<Bitset> domains) :
                    _domains(std::move(domains)),
                    _stamp(_domains.size(), 0)
                {
                }

                auto operator[] (int v) const -> const Bitset & { return _domains[v]; }

                /// Mutable access; the old value is saved the first time v changes at the current level.
                auto modify(int v) -> Bitset &
                {
                    if (_stamp[v] != _epoch) {
                        _trail.push_back(Saved{ v, _stamp[v], _domains[v] });
                        _stamp[v] = _epoch;
                    }
                    return _domains[v];
                }

                auto push() -> void
                {
                    _marks.push_back(_trail.size());
                    ++_epoch;
                }

                auto pop() -> void
                {
                    auto mark = _marks.back();
                    _marks.pop_back();
                    while (_trail.size() > mark) {
                        auto & s = _trail.back();
                        _domains[s.var] = std::move(s.old_domain);
                        _stamp[s.var] = s.old_stamp;
                        _trail.pop_back();
                    }
                    ++_epoch;
                }
        };

        struct Problem
        {
            const SimpleGraph & pattern;
            const SimpleGraph & target;
            vector<Bitset> domains;
            /// Extra pairs of pattern vertices that must receive distinct images.
            vector<vector<int>> not_equal;
            bool all_different = false;
            /// Sets of pattern vertices whose images must be pairwise distinct.
            vector<vector<int>> distinct_groups;
        };

        class Engine
        {
            private:
                const Problem & _problem;
                const SolveBudget & _budget;
                const SolveOptions & _options;

                int _pattern_size, _target_size;
                vector<Bitset> _rows;
                Domains _domains;
                vector<int> _sizes;
                vector<int> _queue;
                vector<bool> _queued;
                Bitset _support;

                // target vertices with equal open (or equal closed) neighbourhoods share an id here
                vector<int> _open_twin, _closed_twin;

                steady_clock::time_point _start;
                std::uint64_t _nodes = 0, _solutions = 0;
                bool _timed_out = false;
                vector<int> _current;

                struct KeyHash
                {
                    auto operator() (const vector<std::uint64_t> & k) const -> std::size_t
                    {
                        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
                        for (auto w : k)
                            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
                        return static_cast<std::size_t>(h);
                    }
                };

                // open variables with their domains, for every subproblem already shown to have no solution
                std::unordered_set<vector<std::uint64_t>, KeyHash> _failures;
                std::size_t _failure_words = 0;
                vector<int> _visit;
                int _visit_epoch = 0;

                vector<vector<int>> _groups_of;
                vector<bool> _group_dirty;
                vector<int> _dirty_groups;

                // scratch space for the matching-based filter
                vector<int> _value_index;
                vector<vector<int>> _var_values, _value_vars;
                vector<int> _match_var, _match_value, _seen, _scc, _low, _order, _stack, _reach;
                vector<bool> _on_stack;
                int _seen_epoch = 0;

            public:
                Engine(const Problem & problem, const SolveBudget & budget, const SolveOptions & options) :
                    _problem(problem),
                    _budget(budget),
                    _options(options),
                    _pattern_size(problem.pattern.vertex_count()),
                    _target_size(problem.target.vertex_count()),
                    _domains(problem.domains),
                    _sizes(_pattern_size),
                    _queued(_pattern_size, false),
                    _support(_target_size),
                    _current(_pattern_size, -1),
                    _visit(_pattern_size, 0),
                    _groups_of(_pattern_size),
                    _group_dirty(problem.distinct_groups.size(), false),
                    _value_index(_target_size, -1)
                {
                    if (_options.distinct_filtering)
                        for (std::size_t g = 0 ; g < problem.distinct_groups.size() ; ++g) {
                            for (int v : problem.distinct_groups[g])
                                _groups_of[v].push_back(static_cast<int>(g));
                            mark_dirty(static_cast<int>(g));
                        }

                    _rows.assign(_target_size, Bitset(_target_size));
                    for (int t = 0 ; t < _target_size ; ++t)
                        for (int s : problem.target.neighbours(t))
                            _rows[t].set(s);
                    for (int v = 0 ; v < _pattern_size ; ++v)
                        _sizes[v] = _domains[v].count();

                    std::map<vector<int>, int> open_ids, closed_ids;
                    for (int t = 0 ; t < _target_size ; ++t) {
                        vector<int> n(problem.target.neighbours(t).begin(), problem.target.neighbours(t).end());
                        _open_twin.push_back(open_ids.try_emplace(n, t).first->second);
                        n.insert(std::lower_bound(n.begin(), n.end(), t), t);
                        _closed_twin.push_back(closed_ids.try_emplace(std::move(n), t).first->second);
                    }
                }

                auto run() -> SolveOutcome
                {
                    _start = steady_clock::now();

                    SolveOutcome result;
                    bool feasible = true;
                    for (int v = 0 ; v < _pattern_size ; ++v) {
                        if (0 == _sizes[v])
                            feasible = false;
                        enqueue(v);
                    }

                    ++_nodes;
                    vector<int> everything(_pattern_size);
                    std::iota(everything.begin(), everything.end(), 0);
                    _solutions = feasible && propagate() ? search(everything) : 0;

                    result.nodes = _nodes;
                    if (_timed_out)
                        result.decision = Decision::timeout;
                    else if (_solutions > 0) {
                        result.decision = Decision::yes;
                        result.solutions = _solutions;
                        if (! _options.count)
                            result.witness = Witness{ _current };
                    }
                    else
                        result.decision = Decision::no;
                    return result;
                }

            private:
                auto enqueue(int v) -> void
                {
                    if (! _queued[v]) {
                        _queued[v] = true;
                        _queue.push_back(v);
                    }
                }

                auto clear_queue() -> void
                {
                    for (int v : _queue)
                        _queued[v] = false;
                    _queue.clear();
                    for (int g : _dirty_groups)
                        _group_dirty[g] = false;
                    _dirty_groups.clear();
                }

                auto mark_dirty(int g) -> void
                {
                    if (! _group_dirty[g]) {
                        _group_dirty[g] = true;
                        _dirty_groups.push_back(g);
                    }
                }

                // true if u still has values left
                auto changed(int u) -> bool
                {
                    _sizes[u] = _domains[u].count();
                    if (0 == _sizes[u])
                        return false;
                    enqueue(u);
                    for (int g : _groups_of[u])
                        mark_dirty(g);
                    return true;
                }

                auto remove_value(int u, int t) -> bool
                {
                    if (! _domains[u].test(t))
                        return true;
                    _domains.modify(u).reset(t);
                    return changed(u);
                }

                /// Everything the domain of v can still be adjacent to, or null if v is not worth revising against.
                auto support_of(int v) -> const Bitset *
                {
                    if (1 == _sizes[v])
                        return &_rows[_domains[v].find_first()];
                    if (! _options.arc_consistency)
                        return nullptr;
                    _support.reset();
                    _domains[v].for_each([&] (int t) { _support |= _rows[t]; });
                    return &_support;
                }

                auto propagate() -> bool
                {
                    do {
                        if (! propagate_arcs())
                            return false;
                        while (_queue.empty() && ! _dirty_groups.empty()) {
                            int g = _dirty_groups.back();
                            _dirty_groups.pop_back();
                            _group_dirty[g] = false;
                            if (! filter_distinct(_problem.distinct_groups[g])) {
                                clear_queue();
                                return false;
                            }
                        }
                    } while (! _queue.empty());
                    return true;
                }

                auto propagate_arcs() -> bool
                {
                    while (! _queue.empty()) {
                        int v = _queue.back();
                        _queue.pop_back();
                        _queued[v] = false;

                        if (auto support = support_of(v))
                            for (int u : _problem.pattern.neighbours(v))
                                if (! _domains[u].is_subset_of(*support)) {
                                    _domains.modify(u) &= *support;
                                    if (! changed(u)) {
                                        clear_queue();
                                        return false;
                                    }
                                }

                        if (1 == _sizes[v]) {
                            int t = _domains[v].find_first();
                            for (int u : _problem.not_equal[v])
                                if (! remove_value(u, t)) {
                                    clear_queue();
                                    return false;
                                }
                            if (_problem.all_different)
                                for (int u = 0 ; u < _pattern_size ; ++u)
                                    if (u != v && ! remove_value(u, t)) {
                                        clear_queue();
                                        return false;
                                    }
                        }
                    }

                    if (_problem.all_different) {
                        Bitset all(_target_size);
                        for (int v = 0 ; v < _pattern_size ; ++v)
                            all |= _domains[v];
                        if (all.count() < _pattern_size)
                            return false;
                    }

                    return true;
                }

                /**
                 * Removes every value that no assignment of pairwise distinct
                 * values to the group can use: a maximum matching of group
                 * vertices to values, then the usual alternating-path and
                 * strongly-connected-component test on each unmatched pair.
                 */
                auto filter_distinct(const vector<int> & group) -> bool
                {
                    const int k = static_cast<int>(group.size());
                    vector<int> values;
                    _var_values.resize(k);
                    for (int i = 0 ; i < k ; ++i) {
                        _var_values[i].clear();
                        _domains[group[i]].for_each([&] (int t) {
                            if (_value_index[t] == -1) {
                                _value_index[t] = static_cast<int>(values.size());
                                values.push_back(t);
                            }
                            _var_values[i].push_back(_value_index[t]);
                        });
                    }
                    const int m = static_cast<int>(values.size());
                    for (int t : values)
                        _value_index[t] = -1;
                    if (m < k)
                        return false;

                    _match_var.assign(k, -1);
                    _match_value.assign(m, -1);
                    for (int i = 0 ; i < k ; ++i)
                        for (int j : _var_values[i])
                            if (_match_value[j] == -1) {
                                _match_var[i] = j;
                                _match_value[j] = i;
                                break;
                            }

                    _seen.assign(m, 0);
                    for (int i = 0 ; i < k ; ++i)
                        if (_match_var[i] == -1) {
                            ++_seen_epoch;
                            if (! augment(i))
                                return false;
                        }

                    // values from which an alternating path reaches a free value
                    _value_vars.resize(m);
                    for (int j = 0 ; j < m ; ++j)
                        _value_vars[j].clear();
                    for (int i = 0 ; i < k ; ++i)
                        for (int j : _var_values[i])
                            if (j != _match_var[i])
                                _value_vars[j].push_back(i);
                    _reach.assign(m, 0);
                    _stack.clear();
                    for (int j = 0 ; j < m ; ++j)
                        if (_match_value[j] == -1) {
                            _reach[j] = 1;
                            _stack.push_back(j);
                        }
                    while (! _stack.empty()) {
                        int j = _stack.back();
                        _stack.pop_back();
                        for (int i : _value_vars[j]) {
                            int jj = _match_var[i];
                            if (! _reach[jj]) {
                                _reach[jj] = 1;
                                _stack.push_back(jj);
                            }
                        }
                    }

                    strongly_connected(k, m);

                    for (int i = 0 ; i < k ; ++i) {
                        int v = group[i];
                        bool removed = false;
                        for (int j : _var_values[i])
                            if (j != _match_var[i] && ! _reach[j] && _scc[i] != _scc[k + j]) {
                                _domains.modify(v).reset(values[j]);
                                removed = true;
                            }
                        if (removed && ! changed(v))
                            return false;
                    }
                    return true;
                }

                auto augment(int i) -> bool
                {
                    for (int j : _var_values[i]) {
                        if (_seen[j] == _seen_epoch)
                            continue;
                        _seen[j] = _seen_epoch;
                        if (_match_value[j] == -1 || augment(_match_value[j])) {
                            _match_var[i] = j;
                            _match_value[j] = i;
                            return true;
                        }
                    }
                    return false;
                }

                /**
                 * Tarjan over vertices 0 .. k-1 (group members) and k .. k+m-1
                 * (values); a member points at its other values, a matched
                 * value at its member.
                 */
                auto strongly_connected(int k, int m) -> void
                {
                    const int n = k + m;
                    _scc.assign(n, -1);
                    _low.assign(n, 0);
                    _order.assign(n, -1);
                    _on_stack.assign(n, false);
                    _stack.clear();
                    int counter = 0, components = 0;

                    // the successor at or after position p, and the position after it
                    auto successor = [&] (int x, int p) -> pair<int, int> {
                        if (x < k) {
                            auto & out = _var_values[x];
                            while (p < static_cast<int>(out.size()) && out[p] == _match_var[x])
                                ++p;
                            if (p < static_cast<int>(out.size()))
                                return { k + out[p], p + 1 };
                        }
                        else if (0 == p && _match_value[x - k] != -1)
                            return { _match_value[x - k], 1 };
                        return { -1, p };
                    };

                    // explicit call stack of (vertex, position in its successors)
                    vector<pair<int, int>> calls;
                    for (int root = 0 ; root < n ; ++root) {
                        if (_order[root] != -1)
                            continue;
                        calls.emplace_back(root, 0);
                        _order[root] = _low[root] = counter++;
                        _stack.push_back(root);
                        _on_stack[root] = true;

                        while (! calls.empty()) {
                            auto & [x, position] = calls.back();
                            auto [next, after] = successor(x, position);
                            if (next != -1) {
                                position = after;
                                int from = x;
                                if (_order[next] == -1) {
                                    _order[next] = _low[next] = counter++;
                                    _stack.push_back(next);
                                    _on_stack[next] = true;
                                    calls.emplace_back(next, 0);
                                }
                                else if (_on_stack[next])
                                    _low[from] = std::min(_low[from], _order[next]);
                                continue;
                            }

                            int done = x;
                            calls.pop_back();
                            if (! calls.empty())
                                _low[calls.back().first] = std::min(_low[calls.back().first], _low[done]);
                            if (_low[done] == _order[done]) {
                                int y;
                                do {
                                    y = _stack.back();
                                    _stack.pop_back();
                                    _on_stack[y] = false;
                                    _scc[y] = components;
                                } while (y != done);
                                ++components;
                            }
                        }
                    }
                }

                /**
                 * Swapping twins s and t is an automorphism of the target. If
                 * every open domain also contains both or neither, the subtree
                 * for t mirrors the one for s, so a failure of s settles t.
                 * Singleton domains can be left out, since propagation has
                 * already pushed their constraints into the open domains, and
                 * so can open variables outside the current component.
                 */
                auto mirrors(int s, int t, const vector<int> & open) const -> bool
                {
                    if (_open_twin[s] != _open_twin[t] && _closed_twin[s] != _closed_twin[t])
                        return false;
                    for (int v : open)
                        if (_domains[v].test(s) != _domains[v].test(t))
                            return false;
                    return true;
                }

                auto out_of_budget() -> bool
                {
                    if (_nodes > _budget.node_limit)
                        _timed_out = true;
                    else if (0 == (_nodes & 0xf) && steady_clock::now() - _start > _budget.wall_limit)
                        _timed_out = true;
                    return _timed_out;
                }

                auto components(const vector<int> & open) -> vector<vector<int>>
                {
                    ++_visit_epoch;
                    for (int v : open)
                        _visit[v] = _visit_epoch;

                    vector<vector<int>> result;
                    vector<int> stack;
                    auto reach = [&] (int u, vector<int> & part) {
                        if (_visit[u] == _visit_epoch) {
                            _visit[u] = -1;
                            part.push_back(u);
                            stack.push_back(u);
                        }
                    };

                    for (int v : open) {
                        if (_visit[v] != _visit_epoch)
                            continue;
                        auto & part = result.emplace_back();
                        reach(v, part);
                        while (! stack.empty()) {
                            int w = stack.back();
                            stack.pop_back();
                            for (int u : _problem.pattern.neighbours(w))
                                reach(u, part);
                            for (int u : _problem.not_equal[w])
                                reach(u, part);
                        }
                        std::sort(part.begin(), part.end());
                    }
                    return result;
                }

                /**
                 * Number of solutions over the variables in scope, or 0/1 when
                 * not counting. Every open variable adjacent to an open
                 * variable in scope is itself in scope, so once propagation
                 * has settled, the outcome depends only on the open domains of
                 * scope. That makes failures safe to remember, and lets open
                 * variables that fall into separate components be solved one
                 * component at a time.
                 */
                auto search(const vector<int> & scope) -> std::uint64_t
                {
                    vector<int> open;
                    for (int v : scope) {
                        if (_sizes[v] > 1)
                            open.push_back(v);
                        else
                            _current[v] = _domains[v].find_first();
                    }
                    if (open.empty())
                        return 1;

                    auto key = failure_key(open);
                    if (_failures.contains(key))
                        return 0;

                    auto result = branch_or_split(open);
                    if (0 == result && ! _timed_out && _failure_words + key.size() <= failure_cache_words) {
                        _failure_words += key.size();
                        _failures.insert(std::move(key));
                    }
                    return result;
                }

                auto failure_key(const vector<int> & open) const -> vector<std::uint64_t>
                {
                    vector<std::uint64_t> key;
                    for (int v : open) {
                        key.push_back(~static_cast<std::uint64_t>(v));
                        auto & w = _domains[v].words();
                        key.insert(key.end(), w.begin(), w.end());
                    }
                    return key;
                }

                auto branch_or_split(const vector<int> & open) -> std::uint64_t
                {
                    if (_options.decompose && ! _problem.all_different) {
                        auto parts = components(open);
                        if (parts.size() > 1) {
                            std::uint64_t total = 1;
                            for (auto & part : parts) {
                                auto c = search(part);
                                if (_timed_out || 0 == c)
                                    return 0;
                                total = saturating_product(total, c);
                            }
                            return total;
                        }
                    }

                    int branch = open.front();
                    for (int v : open)
                        if (_sizes[v] < _sizes[branch])
                            branch = v;

                    vector<int> values;
                    _domains[branch].for_each([&] (int t) { values.push_back(t); });

                    std::uint64_t total = 0;
                    vector<int> failed;
                    for (int t : values) {
                        if (! _options.count && std::any_of(failed.begin(), failed.end(), [&] (int s) { return mirrors(s, t, open); }))
                            continue;

                        ++_nodes;
                        if (out_of_budget())
                            return 0;

                        _domains.push();
                        auto saved_sizes = _sizes;
                        auto & d = _domains.modify(branch);
                        d.reset();
                        d.set(t);
                        _sizes[branch] = 1;
                        enqueue(branch);

                        std::uint64_t c = propagate() ? search(open) : 0;

                        _domains.pop();
                        _sizes = std::move(saved_sizes);
                        if (_timed_out)
                            return 0;
                        if (c > 0 && ! _options.count)
                            return c;
                        if (0 == c)
                            failed.push_back(t);
                        total = saturating_sum(total, c);
                    }

                    return total;
                }
        };

        /// A clique through v found greedily, highest degree neighbours first.
        auto greedy_clique_through(const SimpleGraph & g, int v) -> vector<int>
        {
            vector<int> candidates(g.neighbours(v).begin(), g.neighbours(v).end());
            std::stable_sort(candidates.begin(), candidates.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
            vector<int> clique{ v };
            for (int c : candidates)
                if (std::all_of(clique.begin(), clique.end(), [&] (int x) { return g.adjacent(c, x); }))
                    clique.push_back(c);
            return clique;
        }

        /// Adjacency rows of the subgraph induced by vs, renumbered 0 .. |vs|-1.
        auto induced_rows(const SimpleGraph & g, std::span<const int> vs) -> vector<Bitset>
        {
            vector<Bitset> rows(vs.size(), Bitset(static_cast<int>(vs.size())));
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                for (std::size_t j = i + 1 ; j < vs.size() ; ++j)
                    if (g.adjacent(vs[i], vs[j])) {
                        rows[i].set(static_cast<int>(j));
                        rows[j].set(static_cast<int>(i));
                    }
            return rows;
        }

        /// Most saturated uncoloured vertex first, ties by degree then position.
        auto pick_saturated(const vector<Bitset> & rows, const vector<int> & colour) -> int
        {
            int best = -1, best_saturation = -1, best_degree = -1;
            for (std::size_t v = 0 ; v < rows.size() ; ++v) {
                if (colour[v] != -1)
                    continue;
                Bitset seen(static_cast<int>(rows.size()) + 1);
                rows[v].for_each([&] (int u) { if (colour[u] != -1) seen.set(colour[u]); });
                int saturation = seen.count(), degree = rows[v].count();
                if (saturation > best_saturation || (saturation == best_saturation && degree > best_degree)) {
                    best = static_cast<int>(v);
                    best_saturation = saturation;
                    best_degree = degree;
                }
            }
            return best;
        }

        /// Colours used by DSATUR, or stop_at as soon as that many have been used.
        auto dsatur_colour_count(const vector<Bitset> & rows, int stop_at = std::numeric_limits<int>::max()) -> int
        {
            vector<int> colour(rows.size(), -1);
            int used = 0;
            for (std::size_t step = 0 ; step < rows.size() && used < stop_at ; ++step) {
                int v = pick_saturated(rows, colour);
                Bitset taken(static_cast<int>(rows.size()) + 1);
                rows[v].for_each([&] (int u) { if (colour[u] != -1) taken.set(colour[u]); });
                int c = 0;
                while (taken.test(c))
                    ++c;
                colour[v] = c;
                used = std::max(used, c + 1);
            }
            return used;
        }

        /// Whether a k-colouring exists, or nullopt once the node allowance runs out.
        auto colourable(const vector<Bitset> & rows, vector<int> & colour, int used, int k, std::uint64_t & allowance) -> std::optional<bool>
        {
            int v = pick_saturated(rows, colour);
            if (-1 == v)
                return true;
            if (0 == allowance--)
                return std::nullopt;

            Bitset taken(static_cast<int>(rows.size()) + 1);
            rows[v].for_each([&] (int u) { if (colour[u] != -1) taken.set(colour[u]); });
            // trying one brand new colour is enough, they are all alike
            for (int c = 0 ; c < std::min(k, used + 1) ; ++c) {
                if (taken.test(c))
                    continue;
                colour[v] = c;
                auto r = colourable(rows, colour, std::max(used, c + 1), k, allowance);
                colour[v] = -1;
                if (! r || *r)
                    return r;
            }
            return false;
        }

        /// A lower bound on the chromatic number, exact whenever the allowance suffices.
        auto chromatic_lower_bound(const vector<Bitset> & rows, int clique, std::uint64_t allowance) -> int
        {
            int lower = clique, upper = dsatur_colour_count(rows);
            while (lower < upper) {
                vector<int> colour(rows.size(), -1);
                auto r = colourable(rows, colour, 0, lower, allowance);
                if (! r || *r)
                    break;
                ++lower;
            }
            return lower;
        }

        /**
         * If v goes to t then the neighbourhood of v maps homomorphically
         * into the neighbourhood of t, so the chromatic number of the first
         * cannot exceed that of the second. Pattern side gets a lower bound,
         * target side an upper bound.
         */
        auto apply_structural_filters(Problem & problem, bool degree_filter) -> void
        {
            const auto & g = problem.pattern;
            const auto & h = problem.target;

            vector<int> pattern_bound(g.vertex_count());
            int largest = 0;
            for (int v = 0 ; v < g.vertex_count() ; ++v) {
                auto rows = induced_rows(g, g.neighbours(v));
                pattern_bound[v] = chromatic_lower_bound(rows, static_cast<int>(greedy_clique_through(g, v).size()) - 1, 2000);
                largest = std::max(largest, pattern_bound[v]);
            }

            // an edge forces two colours on either side, so only bigger bounds can prune
            vector<int> target_bound(h.vertex_count(), h.vertex_count());
            if (largest >= 3) {
                Bitset wanted(h.vertex_count());
                for (auto & d : problem.domains)
                    wanted |= d;
                wanted.for_each([&] (int t) {
                    if (h.degree(t) >= largest)
                        target_bound[t] = dsatur_colour_count(induced_rows(h, h.neighbours(t)), largest);
                    else
                        target_bound[t] = h.degree(t);
                });
            }

            for (int v = 0 ; v < g.vertex_count() ; ++v)
                for (int t = 0 ; t < h.vertex_count() ; ++t)
                    if (problem.domains[v].test(t) && (target_bound[t] < pattern_bound[v]
                                || (degree_filter && h.degree(t) < g.degree(v))))
                        problem.domains[v].reset(t);
        }

        /// One greedy clique through each vertex, kept when it has at least three vertices, without repeats.
        auto pattern_cliques(const SimpleGraph & g) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            for (int v = 0 ; v < g.vertex_count() ; ++v) {
                auto clique = greedy_clique_through(g, v);
                if (clique.size() >= 3) {
                    std::sort(clique.begin(), clique.end());
                    result.push_back(std::move(clique));
                }
            }
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
            return result;
        }

        auto run_problem(Problem & problem, const SolveBudget & b, const SolveOptions & o, bool degree_filter) -> SolveOutcome
        {
            if (problem.not_equal.empty())
                problem.not_equal.resize(problem.pattern.vertex_count());
            if (o.distinct_filtering) {
                auto cliques = pattern_cliques(problem.pattern);
                problem.distinct_groups.insert(problem.distinct_groups.end(), cliques.begin(), cliques.end());
            }
            if (o.structural_filters)
                apply_structural_filters(problem, degree_filter);
            Engine engine(problem, b, o);
            return engine.run();
        }

        auto full_domains(const SimpleGraph & g, const SimpleGraph & h) -> vector<Bitset>
        {
            return vector<Bitset>(g.vertex_count(), Bitset(h.vertex_count(), true));
        }
    }

    auto decision_name(Decision d) -> const char *
    {
        switch (d) {
            case Decision::yes:     return "yes";
            case Decision::no:      return "no";
            case Decision::timeout: return "timeout";
        }
        return "unknown";
    }

    auto solve_hom(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        Problem problem{ g, h, full_domains(g, h), {}, false, {} };
        return run_problem(problem, b, o, false);
    }

    auto solve_listhom(const ListHomInstance & inst, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        inst.validate();
        Problem problem{ inst.pattern, inst.target, {}, {}, false, {} };
        for (auto & l : inst.lists) {
            problem.domains.emplace_back(inst.target.vertex_count());
            for (int t : l)
                problem.domains.back().set(t);
        }
        return run_problem(problem, b, o, false);
    }

    auto solve_li_hom(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        // vertices at distance exactly two must differ; adjacent ones differ anyway as h is loopless
        Problem problem{ g, h, full_domains(g, h), vector<vector<int>>(g.vertex_count()), false, {} };
        auto g2 = square(g);
        for (auto & [u, v] : g2.edges())
            if (! g.adjacent(u, v)) {
                problem.not_equal[u].push_back(v);
                problem.not_equal[v].push_back(u);
            }
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (g.degree(v) >= 2) {
                vector<int> closed(g.neighbours(v).begin(), g.neighbours(v).end());
                closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
                problem.distinct_groups.push_back(std::move(closed));
            }
        return run_problem(problem, b, o, true);
    }

    auto solve_si(const SimpleGraph & g, const SimpleGraph & h, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        Problem problem{ g, h, full_domains(g, h), {}, true, {} };
        vector<int> everything(g.vertex_count());
        std::iota(everything.begin(), everything.end(), 0);
        if (g.vertex_count() >= 2)
            problem.distinct_groups.push_back(std::move(everything));
        return run_problem(problem, b, o, true);
    }

    auto solve_kcol(const SimpleGraph & g, int k, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        if (k < 1)
            throw InvalidGraph{ "k-colouring needs k >= 1" };
        return solve_hom(g, complete_graph(k), b, o);
    }

    auto solve(const ProblemInstance & instance, const SolveBudget & b, const SolveOptions & o) -> SolveOutcome
    {
        switch (instance.kind) {
            case ProblemKind::hom:     return solve_hom(instance.pattern, instance.target, b, o);
            case ProblemKind::listhom: return solve_listhom(ListHomInstance{ instance.pattern, instance.target, instance.lists }, b, o);
            case ProblemKind::lihom:   return solve_li_hom(instance.pattern, instance.target, b, o);
            case ProblemKind::si:      return solve_si(instance.pattern, instance.target, b, o);
            case ProblemKind::kcol:    return solve_kcol(instance.pattern, instance.colors, b, o);
        }
        throw Error{ "unknown problem kind" };
    }
}
