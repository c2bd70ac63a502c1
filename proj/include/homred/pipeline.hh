/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMRED_GUARD_PIPELINE_HH
#define HOMRED_GUARD_PIPELINE_HH 1

#include <homred/partition.hh>
#include <homred/reductions.hh>
#include <homred/solvers.hh>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homred
{
    struct StageReport
    {
        std::string name;
        int pattern_vertices = 0;
        long long pattern_edges = 0;
        int target_vertices = 0;
        long long target_edges = 0;
        Decision decision = Decision::timeout;
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    struct PipelineReport
    {
        /// 3-colouring, then list homomorphism, then homomorphism.
        std::vector<StageReport> stages;

        int label_count = 0;
        BalanceReport balance;
        GroupingReport grouping;

        /// Named witness and anchor checks; only those that could run are present.
        std::map<std::string, bool> checks;

        /// False when two stages that finished reached different decisions.
        bool decisions_agree = true;
        bool consistent = true;

        auto to_json() const -> nlohmann::json;
    };

    struct PipelineOptions
    {
        int group_size = 1;
        BalanceParams params = BalanceParams::full_scale(4);
        ColToListHomOptions reduction;
        SolveBudget budget;
    };

    /**
     * Solves the 3-colouring problem on g, its list homomorphism reduction and
     * the homomorphism instance built from that, in that order. Every stage is
     * always solved; when a stage says yes its witness is carried to the
     * neighbouring stages and checked there. Reduction failures propagate.
     */
    auto verify_pipeline(const SimpleGraph & g, const PipelineOptions & options) -> PipelineReport;

    struct BenchOptions
    {
        int instances_per_size = 3;
        SolveBudget budget{ 5'000'000, std::chrono::seconds{ 30 } };
        /// Write measured wall time; when off the column holds "-" and the output is reproducible byte for byte.
        bool timing = true;
    };

    /// CSV with header "n,instance,nodes,wall_ms,decision", one row per generated subgraph isomorphism instance.
    auto bench_si(const std::vector<int> & sizes, std::uint64_t seed, const BenchOptions & options = {}) -> std::string;
}

#endif
