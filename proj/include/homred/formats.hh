/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_FORMATS_HH
#define HOMRED_GUARD_FORMATS_HH 1

#include <homred/graph.hh>
#include <homred/instances.hh>

#include <string>
#include <string_view>
#include <vector>

namespace homred
{
    /**
     * DIMACS-style graph text: "c" comment lines, one "p edge n m" line, then
     * m lines "e u v" with 1-based endpoints. Blank lines are ignored.
     */
    auto read_graph(std::string_view text) -> SimpleGraph;

    /// Comments are written first, one "c" line each, followed by the edges in sorted order.
    auto write_graph(const SimpleGraph & g, const std::vector<std::string> & comments = {}) -> std::string;

    /**
     * One "l v t1 t2 ..." line per pattern vertex, all 1-based; an empty tail
     * is an empty list. Pattern vertices without a line get an empty list.
     * Entries are sorted and deduplicated on reading.
     */
    auto read_lists(std::string_view text, int pattern_size, int target_size) -> Lists;
    auto write_lists(const Lists & lists) -> std::string;

    /// One "w v t" line per pattern vertex, 1-based. Every pattern vertex must appear exactly once.
    auto read_witness(std::string_view text, int pattern_size) -> Witness;
    auto write_witness(const Witness & w) -> std::string;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view contents) -> void;
}

#endif
