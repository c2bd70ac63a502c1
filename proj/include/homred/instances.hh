/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_INSTANCES_HH
#define HOMRED_GUARD_INSTANCES_HH 1

#include <homred/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homred
{
    /// Per pattern vertex, the admissible target vertices, each list ascending.
    using Lists = std::vector<std::vector<int>>;

    struct ListHomInstance
    {
        SimpleGraph pattern;
        SimpleGraph target;
        Lists lists;

        /// Throws InvalidGraph unless there is one ascending, in-range list per pattern vertex.
        auto validate() const -> void;

        /// Every list is the whole target.
        static auto unrestricted(SimpleGraph pattern, SimpleGraph target) -> ListHomInstance;
    };

    enum class ProblemKind
    {
        hom,
        listhom,
        lihom,
        si,
        kcol
    };

    auto kind_name(ProblemKind kind) -> std::string_view;
    auto parse_kind(std::string_view name) -> std::optional<ProblemKind>;

    /**
     * Any of the five problems in one shape. For kcol the target is ignored
     * and colors gives k; for listhom the lists apply; otherwise lists are
     * ignored.
     */
    struct ProblemInstance
    {
        ProblemKind kind = ProblemKind::hom;
        SimpleGraph pattern;
        SimpleGraph target;
        Lists lists;
        int colors = 0;

        static auto hom(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance;
        static auto listhom(const ListHomInstance & inst) -> ProblemInstance;
        static auto lihom(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance;
        static auto si(SimpleGraph pattern, SimpleGraph target) -> ProblemInstance;
        static auto kcol(SimpleGraph pattern, int colors) -> ProblemInstance;
    };

    /// Result of check_witness: valid, or a description of the first constraint found violated.
    struct WitnessCheck
    {
        bool valid = true;
        std::string violation;

        explicit operator bool() const { return valid; }
    };

    auto check_witness(const ProblemInstance & instance, const Witness & w) -> WitnessCheck;

    /// Vertices sharing a neighbour in g get distinct images.
    auto is_locally_injective(const SimpleGraph & g, const Witness & w) -> bool;
}

#endif
