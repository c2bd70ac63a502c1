/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/instances.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace homred
{
    auto ListHomInstance::validate() const -> void
    {
        if (static_cast<int>(lists.size()) != pattern.vertex_count())
            throw InvalidGraph{ "expected " + to_string(pattern.vertex_count()) + " lists, got " + to_string(lists.size()) };
        for (auto & l : lists) {
            if (! std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end())
                throw InvalidGraph{ "lists must be strictly ascending" };
            for (int t : l)
                if (t < 0 || t >= target.vertex_count())
                    throw InvalidGraph{ "list entry " + to_string(t) + " is not a target vertex" };
        }
    }

    auto ListHomInstance::unrestricted(SimpleGraph pattern, SimpleGraph target) -> ListHomInstance
    {
        vector<int> all(target.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        Lists lists(pattern.vertex_count(), all);
        return ListHomInstance{ std::move(pattern), std::move(target), std::move(lists) };
    }

    auto kind_name(ProblemKind kind) -> string_view
    {
        switch (kind) {
            case ProblemKind::hom:     return "hom";
            case ProblemKind::listhom: return "listhom";
            case ProblemKind::lihom:   return "lihom";
            case ProblemKind::si:      return "si";
            case ProblemKind::kcol:    return "kcol";
        }
        return "unknown";
    }

    auto parse_kind(string_view name) -> optional<ProblemKind>
    {
        for (auto k : { ProblemKind::hom, ProblemKind::listhom, ProblemKind::lihom, ProblemKind::si, ProblemKind::kcol })
            if (kind_name(k) == name)
                return k;
        return std::nullopt;
    }

    auto ProblemInstance::hom(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance
    {
        return ProblemInstance{ ProblemKind::hom, std::move(pattern), std::move(target), {}, 0 };
    }

    auto ProblemInstance::listhom(const ListHomInstance & inst) -> ProblemInstance
    {
        return ProblemInstance{ ProblemKind::listhom, inst.pattern, inst.target, inst.lists, 0 };
    }

    auto ProblemInstance::lihom(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance
    {
        return ProblemInstance{ ProblemKind::lihom, std::move(pattern), std::move(target), {}, 0 };
    }

    auto ProblemInstance::si(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance
    {
        return ProblemInstance{ ProblemKind::si, std::move(pattern), std::move(target), {}, 0 };
    }

    auto ProblemInstance::kcol(SimpleGraph pattern, int colors) -> ProblemInstance
    {
        return ProblemInstance{ ProblemKind::kcol, std::move(pattern), SimpleGraph{}, {}, colors };
    }

    auto is_locally_injective(const SimpleGraph & g, const Witness & w) -> bool
    {
        for (int v = 0 ; v < g.vertex_count() ; ++v) {
            vector<int> images;
            for (int u : g.neighbours(v))
                images.push_back(w.mapping[u]);
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end())
                return false;
        }
        return true;
    }

    auto check_witness(const ProblemInstance & instance, const Witness & w) -> WitnessCheck
    {
        auto fail = [] (string why) { return WitnessCheck{ false, std::move(why) }; };

        const auto & g = instance.pattern;
        const bool kcol = instance.kind == ProblemKind::kcol;
        const int target_size = kcol ? instance.colors : instance.target.vertex_count();

        if (static_cast<int>(w.mapping.size()) != g.vertex_count())
            return fail("witness maps " + to_string(w.mapping.size()) + " vertices, pattern has " + to_string(g.vertex_count()));
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (w.mapping[v] < 0 || w.mapping[v] >= target_size)
                return fail("vertex " + to_string(v) + " maps outside the target");

        for (auto & [u, v] : g.edges()) {
            int a = w.mapping[u], b = w.mapping[v];
            bool ok = kcol ? a != b : instance.target.adjacent(a, b);
            if (! ok)
                return fail("edge " + to_string(u) + " " + to_string(v) + " maps to non-edge " + to_string(a) + " " + to_string(b));
        }

        switch (instance.kind) {
            case ProblemKind::hom:
            case ProblemKind::kcol:
                break;

            case ProblemKind::listhom:
                if (static_cast<int>(instance.lists.size()) != g.vertex_count())
                    return fail("instance has the wrong number of lists");
                for (int v = 0 ; v < g.vertex_count() ; ++v) {
                    auto & l = instance.lists[v];
                    if (! std::binary_search(l.begin(), l.end(), w.mapping[v]))
                        return fail("vertex " + to_string(v) + " maps to " + to_string(w.mapping[v]) + " outside its list");
                }
                break;

            case ProblemKind::lihom:
                for (int v = 0 ; v < g.vertex_count() ; ++v) {
                    auto n = g.neighbours(v);
                    for (std::size_t i = 0 ; i < n.size() ; ++i)
                        for (std::size_t j = i + 1 ; j < n.size() ; ++j)
                            if (w.mapping[n[i]] == w.mapping[n[j]])
                                return fail("vertices " + to_string(n[i]) + " and " + to_string(n[j]) + " share neighbour "
                                        + to_string(v) + " and image " + to_string(w.mapping[n[i]]));
                }
                break;

            case ProblemKind::si: {
                vector<int> owner(target_size, -1);
                for (int v = 0 ; v < g.vertex_count() ; ++v) {
                    if (owner[w.mapping[v]] != -1)
                        return fail("vertices " + to_string(owner[w.mapping[v]]) + " and " + to_string(v) + " both map to "
                                + to_string(w.mapping[v]));
                    owner[w.mapping[v]] = v;
                }
                break;
            }
        }

        return WitnessCheck{};
    }
}
