/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/reductions.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

using std::optional;
using std::pair;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::uint8_t;
using std::vector;

namespace homred
{
    auto EncodedTargetVertex::operator< (const EncodedTargetVertex & other) const -> bool
    {
        if (label != other.label)
            return label < other.label;
        return code < other.code;
    }

    auto encoded_adjacent(const EncodedTargetVertex & a, const EncodedTargetVertex & b) -> bool
    {
        return a.code[b.label - 1] != b.code[a.label - 1];
    }

    auto encoding_string(const EncodedTargetVertex & v) -> string
    {
        string result = to_string(v.label) + ":";
        for (auto c : v.code)
            result += static_cast<char>('0' + c);
        return result;
    }

    auto bucket_neighbor_map(const GroupedGraph & gg, int bucket) -> vector<int>
    {
        const int colors = gg.labels.color_count();
        const int own_label = gg.labels[bucket];
        vector<int> result(colors, -1);

        for (int u : gg.buckets[bucket])
            for (int w : gg.base.neighbours(u)) {
                int other = gg.bucket_of[w];
                int label = gg.labels[other];
                if (other == bucket)
                    throw GroupingPropertyViolated{ "bucket " + to_string(bucket) + " is not independent" };
                if (label == own_label)
                    throw GroupingPropertyViolated{ "buckets " + to_string(bucket) + " and " + to_string(other) + " are adjacent with equal labels" };
                if (result[label - 1] != -1)
                    throw GroupingPropertyViolated{ "bucket " + to_string(bucket) + " has two edges towards label " + to_string(label) };
                result[label - 1] = u;
            }

        return result;
    }

    namespace
    {
        auto encode_with_map(const GroupedGraph & gg, int bucket, const vector<int> & phi, span<const int> f) -> vector<uint8_t>
        {
            const auto & members = gg.buckets[bucket];
            if (f.size() != members.size())
                throw InvalidWitness{ "colouring of bucket " + to_string(bucket) + " has the wrong size" };

            vector<uint8_t> code(phi.size(), 0);
            for (std::size_t i = 0 ; i < phi.size() ; ++i) {
                if (-1 == phi[i])
                    continue;
                auto pos = std::lower_bound(members.begin(), members.end(), phi[i]) - members.begin();
                int c = f[pos];
                if (c < 1 || c > 3)
                    throw InvalidWitness{ "colour " + to_string(c) + " is not one of 1, 2, 3" };
                code[i] = static_cast<uint8_t>(c);
            }
            return code;
        }

        auto saturating_power(uint64_t base, uint64_t exponent) -> uint64_t
        {
            uint64_t result = 1;
            for (uint64_t i = 0 ; i < exponent ; ++i) {
                if (result > std::numeric_limits<uint64_t>::max() / base)
                    return std::numeric_limits<uint64_t>::max();
                result *= base;
            }
            return result;
        }
    }

    auto encode_coloring(const GroupedGraph & gg, int bucket, span<const int> f) -> vector<uint8_t>
    {
        return encode_with_map(gg, bucket, bucket_neighbor_map(gg, bucket), f);
    }

    auto col_to_listhom(const SimpleGraph & g, int group_size, const BalanceParams & params,
            const ColToListHomOptions & options) -> ColToListHom
    {
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (0 == g.degree(v))
                throw IsolatedVertex{ v, "vertex " + to_string(v) + " is isolated" };
        return col_to_listhom(grouping(g, group_size, params), options);
    }

    auto col_to_listhom(const GroupedGraph & gg, const ColToListHomOptions & options) -> ColToListHom
    {
        for (int v = 0 ; v < gg.base.vertex_count() ; ++v)
            if (0 == gg.base.degree(v))
                throw IsolatedVertex{ v, "vertex " + to_string(v) + " is isolated" };
        if (! verify_grouping(gg, 1).structural_pass())
            throw GroupingPropertyViolated{ "grouping fails its structural properties" };

        const int colors = gg.labels.color_count();
        const int bucket_count = static_cast<int>(gg.buckets.size());

        ColToListHom result;
        result.grouping = gg;
        result.neighbor_maps.resize(bucket_count);

        uint64_t total_entries = 0;
        for (int b = 0 ; b < bucket_count ; ++b) {
            result.neighbor_maps[b] = bucket_neighbor_map(gg, b);
            total_entries += saturating_power(3, gg.buckets[b].size());
            if (total_entries > options.vertex_cap)
                throw TargetTooLarge{ "lists would hold more than " + to_string(options.vertex_cap) + " entries" };
        }

        // each bucket's list: every colouring of it, encoded, paired with its label
        vector<vector<EncodedTargetVertex>> raw_lists(bucket_count);
        for (int b = 0 ; b < bucket_count ; ++b) {
            const int size = static_cast<int>(gg.buckets[b].size());
            vector<int> f(size, 1);
            while (true) {
                raw_lists[b].push_back(EncodedTargetVertex{ encode_with_map(gg, b, result.neighbor_maps[b], f), gg.labels[b] });
                int pos = size - 1;
                while (pos >= 0 && f[pos] == 3)
                    f[pos--] = 1;
                if (pos < 0)
                    break;
                ++f[pos];
            }
        }

        std::map<EncodedTargetVertex, int> index;
        if (options.trim) {
            for (auto & l : raw_lists)
                for (auto & e : l)
                    index.emplace(e, 0);
            for (auto & [e, i] : index) {
                i = static_cast<int>(result.encoding.size());
                result.encoding.push_back(e);
            }
        }
        else {
            uint64_t per_label = saturating_power(4, colors);
            uint64_t total = per_label == std::numeric_limits<uint64_t>::max() ? per_label : per_label * colors;
            if (total > options.vertex_cap || total / colors != per_label)
                throw TargetTooLarge{ "untrimmed target would have 4^L L = " + (per_label == std::numeric_limits<uint64_t>::max()
                            ? string{ "more than 2^64" } : to_string(total)) + " vertices" };
            long double edges = 3.0L * total * total / 8.0L;
            if (edges > options.edge_cap)
                throw TargetTooLarge{ "untrimmed target would have more than " + to_string(options.edge_cap) + " edges" };

            for (int label = 1 ; label <= colors ; ++label)
                for (uint64_t value = 0 ; value < per_label ; ++value) {
                    EncodedTargetVertex e{ vector<uint8_t>(colors, 0), label };
                    uint64_t rest = value;
                    for (int i = colors - 1 ; i >= 0 ; --i) {
                        e.code[i] = static_cast<uint8_t>(rest % 4);
                        rest /= 4;
                    }
                    result.encoding.push_back(std::move(e));
                }
        }

        auto lookup = [&] (const EncodedTargetVertex & e) -> int {
            auto it = std::lower_bound(result.encoding.begin(), result.encoding.end(), e);
            return static_cast<int>(it - result.encoding.begin());
        };

        Lists lists(bucket_count);
        for (int b = 0 ; b < bucket_count ; ++b) {
            for (auto & e : raw_lists[b])
                lists[b].push_back(lookup(e));
            std::sort(lists[b].begin(), lists[b].end());
            lists[b].erase(std::unique(lists[b].begin(), lists[b].end()), lists[b].end());
        }

        vector<Edge> edges;
        const int target_size = static_cast<int>(result.encoding.size());
        for (int a = 0 ; a < target_size ; ++a)
            for (int b = a + 1 ; b < target_size ; ++b)
                if (encoded_adjacent(result.encoding[a], result.encoding[b]))
                    edges.emplace_back(a, b);

        result.instance = ListHomInstance{ gg.quotient, SimpleGraph::from_edges(target_size, edges), std::move(lists) };
        return result;
    }

    auto lift_coloring(const ColToListHom & reduction, const Coloring & three_coloring) -> Witness
    {
        const auto & gg = reduction.grouping;
        if (three_coloring.size() != gg.base.vertex_count() || ! is_proper(gg.base, three_coloring))
            throw InvalidWitness{ "not a proper colouring of the base graph" };

        Witness result;
        for (int b = 0 ; b < static_cast<int>(gg.buckets.size()) ; ++b) {
            vector<int> f;
            for (int v : gg.buckets[b])
                f.push_back(three_coloring[v]);
            EncodedTargetVertex e{ encode_with_map(gg, b, reduction.neighbor_maps[b], f), gg.labels[b] };
            auto it = std::lower_bound(reduction.encoding.begin(), reduction.encoding.end(), e);
            if (it == reduction.encoding.end() || ! (*it == e))
                throw InvalidWitness{ "bucket " + to_string(b) + " encodes to a vertex missing from the target" };
            result.mapping.push_back(static_cast<int>(it - reduction.encoding.begin()));
        }
        return result;
    }

    auto project_to_coloring(const ColToListHom & reduction, const Witness & w) -> Coloring
    {
        const auto & gg = reduction.grouping;
        if (! check_witness(ProblemInstance::listhom(reduction.instance), w))
            throw InvalidWitness{ "not a list homomorphism of the reduced instance" };

        vector<int> colors(gg.base.vertex_count(), 0);
        for (int b = 0 ; b < static_cast<int>(gg.buckets.size()) ; ++b) {
            const auto & e = reduction.encoding[w.mapping[b]];
            const auto & phi = reduction.neighbor_maps[b];
            for (std::size_t i = 0 ; i < phi.size() ; ++i)
                if (phi[i] != -1)
                    colors[phi[i]] = e.code[i];
        }

        for (int v = 0 ; v < gg.base.vertex_count() ; ++v)
            if (colors[v] < 1 || colors[v] > 3)
                throw InvalidWitness{ "vertex " + to_string(v) + " receives no colour from its bucket's image" };

        Coloring result{ 3, std::move(colors) };
        if (! is_proper(gg.base, result))
            throw InvalidWitness{ "projected colouring is not proper" };
        return result;
    }

    auto listhom_to_hom(const ListHomInstance & inst) -> HomInstance
    {
        inst.validate();
        const int h = inst.target.vertex_count();

        HomInstance result;
        result.source = inst;

        if (0 == h) {
            // nothing to anchor: a non-empty pattern fails either way, an empty one succeeds either way
            result.pattern = inst.pattern;
            result.target = inst.target;
            result.provenance.pattern_vertex.resize(inst.pattern.vertex_count());
            std::iota(result.provenance.pattern_vertex.begin(), result.provenance.pattern_vertex.end(), 0);
            return result;
        }

        auto chain = build_t(h, h);
        auto matching = build_a(h);
        const auto & z = chain.anchor("z");
        const auto & a = matching.anchor("a");
        const auto & b = matching.anchor("b");

        auto build_side = [&] (const SimpleGraph & core, auto && core_edges) {
            vector<SimpleGraph> parts{ core, chain.graph, matching.graph };
            vector<pair<Handle, Handle>> extra;
            for (int i = 0 ; i < h ; ++i) {
                extra.emplace_back(Handle{ 1, z[i] }, Handle{ 2, a[i] });
                extra.emplace_back(Handle{ 1, z[i] }, Handle{ 2, b[i] });
            }
            core_edges(extra);
            return assemble(parts, {}, extra);
        };

        auto pattern_side = build_side(inst.pattern, [&] (vector<pair<Handle, Handle>> & extra) {
            for (int v = 0 ; v < inst.pattern.vertex_count() ; ++v)
                for (int j = 0 ; j < h ; ++j) {
                    extra.emplace_back(Handle{ 0, v }, Handle{ 2, a[j] });
                    if (! std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), j))
                        extra.emplace_back(Handle{ 0, v }, Handle{ 2, b[j] });
                }
        });

        auto target_side = build_side(inst.target, [&] (vector<pair<Handle, Handle>> & extra) {
            for (int t = 0 ; t < h ; ++t)
                for (int j = 0 ; j < h ; ++j) {
                    extra.emplace_back(Handle{ 0, t }, Handle{ 2, a[j] });
                    if (j != t)
                        extra.emplace_back(Handle{ 0, t }, Handle{ 2, b[j] });
                }
        });

        result.pattern = pattern_side.graph;
        result.target = target_side.graph;
        result.provenance.pattern_vertex = pattern_side.handle_map[0];
        result.provenance.target_vertex = target_side.handle_map[0];
        for (int part : { 1, 2 }) {
            auto & p = pattern_side.handle_map[part];
            auto & t = target_side.handle_map[part];
            result.provenance.gadget_in_pattern.insert(result.provenance.gadget_in_pattern.end(), p.begin(), p.end());
            result.provenance.gadget_in_target.insert(result.provenance.gadget_in_target.end(), t.begin(), t.end());
        }
        return result;
    }

    auto lift_witness(const HomInstance & hom, const Witness & w) -> Witness
    {
        if (auto check = check_witness(ProblemInstance::listhom(hom.source), w) ; ! check)
            throw InvalidWitness{ "not a list homomorphism: " + check.violation };

        const auto & p = hom.provenance;
        Witness result;
        result.mapping.assign(hom.pattern.vertex_count(), -1);
        for (int v = 0 ; v < hom.source.pattern.vertex_count() ; ++v)
            result.mapping[p.pattern_vertex[v]] = p.target_vertex.empty() ? w.mapping[v] : p.target_vertex[w.mapping[v]];
        for (std::size_t k = 0 ; k < p.gadget_in_pattern.size() ; ++k)
            result.mapping[p.gadget_in_pattern[k]] = p.gadget_in_target[k];
        return result;
    }

    auto project_witness(const HomInstance & hom, const Witness & w) -> Witness
    {
        if (auto check = check_witness(ProblemInstance::hom(hom.pattern, hom.target), w) ; ! check)
            throw InvalidWitness{ "not a homomorphism: " + check.violation };

        const auto & p = hom.provenance;
        vector<int> original(hom.target.vertex_count(), -1);
        for (std::size_t t = 0 ; t < p.target_vertex.size() ; ++t)
            original[p.target_vertex[t]] = static_cast<int>(t);

        Witness result;
        for (int v = 0 ; v < hom.source.pattern.vertex_count() ; ++v) {
            int image = original[w.mapping[p.pattern_vertex[v]]];
            if (-1 == image)
                throw InvalidWitness{ "pattern vertex " + to_string(v) + " is not mapped into the original target" };
            result.mapping.push_back(image);
        }

        if (auto check = check_witness(ProblemInstance::listhom(hom.source), result) ; ! check)
            throw InvalidWitness{ "projection is not a list homomorphism: " + check.violation };
        return result;
    }

    SiInstanceFamily::SiInstanceFamily(SimpleGraph pattern, SimpleGraph base) :
        _pattern(std::move(pattern)),
        _base(std::move(base))
    {
    }

    auto SiInstanceFamily::size() const -> uint64_t
    {
        // C(n + k - 1, k - 1) built up as a running product of exact binomials
        const uint64_t n = _pattern.vertex_count(), k = _base.vertex_count();
        if (0 == k)
            return 0 == n ? 1 : 0;
        unsigned __int128 result = 1;
        for (uint64_t i = 1 ; i < k ; ++i) {
            result = result * (n + i) / i;
            if (result > std::numeric_limits<uint64_t>::max())
                return std::numeric_limits<uint64_t>::max();
        }
        return static_cast<uint64_t>(result);
    }

    auto SiInstanceFamily::first() const -> optional<vector<int>>
    {
        const int k = _base.vertex_count();
        if (0 == k)
            return 0 == _pattern.vertex_count() ? optional<vector<int>>{ vector<int>{} } : std::nullopt;
        vector<int> result(k, 0);
        result[0] = _pattern.vertex_count();
        return result;
    }

    auto SiInstanceFamily::next(vector<int> & replication) const -> bool
    {
        const int k = static_cast<int>(replication.size());
        int pos = k - 2;
        while (pos >= 0 && 0 == replication[pos])
            --pos;
        if (pos < 0)
            return false;

        int tail = replication[k - 1];
        replication[k - 1] = 0;
        --replication[pos];
        replication[pos + 1] = tail + 1;
        return true;
    }

    auto SiInstanceFamily::host(const vector<int> & replication) const -> SiHost
    {
        SiHost result;
        result.replication = replication;
        vector<vector<int>> copies(_base.vertex_count());
        for (int v = 0 ; v < _base.vertex_count() ; ++v)
            for (int c = 0 ; c < replication[v] ; ++c) {
                copies[v].push_back(static_cast<int>(result.prototype.size()));
                result.prototype.push_back(v);
            }

        vector<Edge> edges;
        for (auto & [u, v] : _base.edges())
            for (int cu : copies[u])
                for (int cv : copies[v])
                    edges.emplace_back(cu, cv);

        result.graph = SimpleGraph::from_edges(static_cast<int>(result.prototype.size()), edges);
        return result;
    }

    auto SiInstanceFamily::for_each(const std::function<auto (const SiHost &) -> bool> & visit) const -> void
    {
        auto replication = first();
        if (! replication)
            return;
        do {
            if (! visit(host(*replication)))
                return;
        } while (next(*replication));
    }

    auto hom_to_si_instances(const SimpleGraph & g, const SimpleGraph & h) -> SiInstanceFamily
    {
        if (g.vertex_count() < 1)
            throw InvalidGraph{ "the pattern needs at least one vertex" };
        return SiInstanceFamily{ g, h };
    }

    auto project_si_witness(const SiHost & host, const Witness & w) -> Witness
    {
        Witness result;
        for (int image : w.mapping)
            result.mapping.push_back(host.prototype.at(image));
        return result;
    }
}
