/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_REDUCTIONS_HH
#define HOMRED_GUARD_REDUCTIONS_HH 1

#include <homred/gadgets.hh>
#include <homred/graph.hh>
#include <homred/instances.hh>
#include <homred/partition.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homred
{
    /**
     * A target vertex of the list homomorphism instance built from a
     * 3-colouring problem: a bucket label and, for every label, the colour
     * (or 0) of the bucket vertex facing the neighbouring bucket with that
     * label.
     */
    struct EncodedTargetVertex
    {
        std::vector<std::uint8_t> code;
        int label = 1;

        auto operator== (const EncodedTargetVertex &) const -> bool = default;
        /// Orders by label, then code lexicographically.
        auto operator< (const EncodedTargetVertex & other) const -> bool;
    };

    /// (R1, l1) and (R2, l2) are adjacent iff R1[l2] != R2[l1].
    auto encoded_adjacent(const EncodedTargetVertex & a, const EncodedTargetVertex & b) -> bool;

    /// "l:R1R2...RL", for example "3:0120".
    auto encoding_string(const EncodedTargetVertex & v) -> std::string;

    /**
     * For each label i (index i - 1), the unique vertex of the bucket with a
     * neighbour in the label-i neighbour bucket, or -1 if there is no such
     * bucket. Throws GroupingPropertyViolated when uniqueness fails.
     */
    auto bucket_neighbor_map(const GroupedGraph & gg, int bucket) -> std::vector<int>;

    /// f gives colours 1..3 to the bucket's vertices in ascending order.
    auto encode_coloring(const GroupedGraph & gg, int bucket, std::span<const int> f) -> std::vector<std::uint8_t>;

    struct ColToListHomOptions
    {
        /// Keep only target vertices that occur in some list.
        bool trim = true;
        std::uint64_t vertex_cap = std::uint64_t{ 1 } << 20;
        std::uint64_t edge_cap = std::uint64_t{ 1 } << 26;
    };

    struct ColToListHom
    {
        GroupedGraph grouping;
        /// Pattern is the quotient; target vertex k stands for encoding[k].
        ListHomInstance instance;
        std::vector<EncodedTargetVertex> encoding;
        std::vector<std::vector<int>> neighbor_maps;
    };

    /**
     * Equisatisfiable list homomorphism instance for 3-colouring g. Throws
     * IsolatedVertex if g has an isolated vertex, TargetTooLarge when the
     * untrimmed target would pass the caps, and whatever grouping() throws.
     */
    auto col_to_listhom(const SimpleGraph & g, int group_size, const BalanceParams & params,
            const ColToListHomOptions & options = {}) -> ColToListHom;

    /// Same, from an already built grouping. Throws GroupingPropertyViolated unless its structural properties hold.
    auto col_to_listhom(const GroupedGraph & gg, const ColToListHomOptions & options = {}) -> ColToListHom;

    /// Bucket B goes to (encoding of the colouring restricted to B, label of B). Throws InvalidWitness unless proper 3-colouring.
    auto lift_coloring(const ColToListHom & reduction, const Coloring & three_coloring) -> Witness;

    /// Reads each vertex's colour back out of its bucket's image. Throws InvalidWitness unless the result is proper.
    auto project_to_coloring(const ColToListHom & reduction, const Witness & w) -> Coloring;

    /// Where each part of a list-hom instance ended up in the homomorphism instance built from it.
    struct HomProvenance
    {
        std::vector<int> pattern_vertex;
        std::vector<int> target_vertex;
        /// The gadget part (T then A) is built identically on both sides; entry k is the same gadget vertex.
        std::vector<int> gadget_in_pattern;
        std::vector<int> gadget_in_target;
    };

    struct HomInstance
    {
        SimpleGraph pattern;
        SimpleGraph target;
        ListHomInstance source;
        HomProvenance provenance;
    };

    /**
     * Pattern: copy of the list-hom pattern, T with h blocks after the first,
     * and the matching A_h, where h is the target size; z_i joined to a_i and
     * b_i; every pattern vertex joined to every a_j and to b_j exactly when
     * target vertex j is missing from its list. Target: the same with the
     * list-hom target, each target vertex j joined to every a and every b
     * except b_j.
     */
    auto listhom_to_hom(const ListHomInstance & inst) -> HomInstance;

    /// Throws InvalidWitness unless w is a list homomorphism of hom.source.
    auto lift_witness(const HomInstance & hom, const Witness & w) -> Witness;

    /// Throws InvalidWitness unless w is a homomorphism and its projection is a list homomorphism.
    auto project_witness(const HomInstance & hom, const Witness & w) -> Witness;

    /// A host graph in which vertex v of the original target is repeated replication[v] times.
    struct SiHost
    {
        std::vector<int> replication;
        SimpleGraph graph;
        /// Original target vertex each host vertex copies.
        std::vector<int> prototype;
    };

    /**
     * Every way of spreading |V(g)| vertices over the vertices of h, each
     * yielding the host of one subgraph isomorphism instance with pattern g.
     * Sequences come lazily, starting from (n, 0, ..., 0) and ending at
     * (0, ..., 0, n), in decreasing lexicographic order.
     */
    class SiInstanceFamily
    {
        private:
            SimpleGraph _pattern;
            SimpleGraph _base;

        public:
            SiInstanceFamily(SimpleGraph pattern, SimpleGraph base);

            auto pattern() const -> const SimpleGraph & { return _pattern; }

            /// C(|V(g)| + |V(h)| - 1, |V(h)| - 1), saturating at the largest uint64.
            auto size() const -> std::uint64_t;

            auto first() const -> std::optional<std::vector<int>>;

            /// Advance to the next sequence; false once the last has been passed.
            auto next(std::vector<int> & replication) const -> bool;

            auto host(const std::vector<int> & replication) const -> SiHost;

            /// Visit hosts in order until the visitor returns false.
            auto for_each(const std::function<auto (const SiHost &) -> bool> & visit) const -> void;
    };

    auto hom_to_si_instances(const SimpleGraph & g, const SimpleGraph & h) -> SiInstanceFamily;

    /// Sends each pattern vertex to the prototype of its image in the host.
    auto project_si_witness(const SiHost & host, const Witness & w) -> Witness;
}

#endif
