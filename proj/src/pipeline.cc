/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homred/errors.hh>
#include <homred/pipeline.hh>
#include <homred/random_graph.hh>

#include <chrono>
#include <cstdio>
#include <sstream>

using std::string;
using std::uint64_t;
using std::vector;

namespace homred
{
    namespace
    {
        auto timed_solve(StageReport & stage, auto && solve) -> SolveOutcome
        {
            auto start = std::chrono::steady_clock::now();
            auto outcome = solve();
            stage.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            stage.decision = outcome.decision;
            stage.nodes = outcome.nodes;
            return outcome;
        }

        template <typename F_>
        auto check_throws_not(F_ && f) -> bool
        {
            try {
                return f();
            }
            catch (const InvalidWitness &) {
                return false;
            }
        }
    }

    auto PipelineReport::to_json() const -> nlohmann::json
    {
        nlohmann::json j;
        for (auto & s : stages)
            j["stages"].push_back({
                    { "name", s.name },
                    { "pattern", { { "vertices", s.pattern_vertices }, { "edges", s.pattern_edges } } },
                    { "target", { { "vertices", s.target_vertices }, { "edges", s.target_edges } } },
                    { "decision", decision_name(s.decision) },
                    { "nodes", s.nodes },
                    { "seconds", s.seconds } });

        j["labels"] = label_count;
        j["balance"] = {
            { "proper_on_square", balance.proper_on_square },
            { "class_sizes_bounded", balance.class_sizes_bounded },
            { "pair_edges_bounded", balance.pair_edges_bounded },
            { "class_cap", balance.class_cap } };
        j["grouping"] = {
            { "buckets", grouping.bucket_count },
            { "bucket_count_bounded", grouping.bucket_count_bounded },
            { "labels_proper_on_square", grouping.labels_proper_on_square },
            { "buckets_independent", grouping.buckets_independent },
            { "one_edge_between_buckets", grouping.one_edge_between_buckets } };
        j["checks"] = checks;
        j["decisions_agree"] = decisions_agree;
        j["consistent"] = consistent;
        return j;
    }

    auto verify_pipeline(const SimpleGraph & g, const PipelineOptions & options) -> PipelineReport
    {
        PipelineReport report;

        report.stages.push_back(StageReport{ "kcol", g.vertex_count(), g.edge_count(), 3, 3 });
        auto kcol = timed_solve(report.stages.back(), [&] { return solve_kcol(g, 3, options.budget); });

        auto reduction = col_to_listhom(g, options.group_size, options.params, options.reduction);
        const auto & gg = reduction.grouping;
        report.label_count = gg.labels.color_count();
        report.grouping = verify_grouping(gg, options.group_size);
        report.balance = verify_balanced(g, gg.vertex_coloring(), options.params);

        const auto & lh = reduction.instance;
        report.stages.push_back(StageReport{ "listhom", lh.pattern.vertex_count(), lh.pattern.edge_count(),
                lh.target.vertex_count(), lh.target.edge_count() });
        auto listhom = timed_solve(report.stages.back(), [&] { return solve_listhom(lh, options.budget); });

        auto hom = listhom_to_hom(lh);
        report.stages.push_back(StageReport{ "hom", hom.pattern.vertex_count(), hom.pattern.edge_count(),
                hom.target.vertex_count(), hom.target.edge_count() });
        auto homo = timed_solve(report.stages.back(), [&] { return solve_hom(hom.pattern, hom.target, options.budget); });

        auto & checks = report.checks;
        if (kcol.witness) {
            Coloring c{ 3, [&] { auto m = kcol.witness->mapping; for (auto & x : m) ++x; return m; }() };
            checks["kcol_witness_valid"] = is_proper(g, c);
            auto lifted = check_throws_not([&] {
                auto w = lift_coloring(reduction, c);
                return bool(check_witness(ProblemInstance::listhom(lh), w));
            });
            checks["coloring_lifts_to_listhom"] = lifted;
        }
        if (listhom.witness) {
            checks["listhom_witness_valid"] = bool(check_witness(ProblemInstance::listhom(lh), *listhom.witness));
            checks["listhom_witness_locally_injective"] = is_locally_injective(lh.pattern, *listhom.witness);
            checks["listhom_projects_to_coloring"] = check_throws_not([&] {
                return is_proper(g, project_to_coloring(reduction, *listhom.witness));
            });
            checks["listhom_lifts_to_hom"] = check_throws_not([&] {
                auto w = lift_witness(hom, *listhom.witness);
                return bool(check_witness(ProblemInstance::hom(hom.pattern, hom.target), w))
                    && project_witness(hom, w) == *listhom.witness;
            });
        }
        if (homo.witness) {
            checks["hom_witness_valid"] = bool(check_witness(ProblemInstance::hom(hom.pattern, hom.target), *homo.witness));
            checks["hom_projects_to_coloring"] = check_throws_not([&] {
                auto w = project_witness(hom, *homo.witness);
                return is_proper(g, project_to_coloring(reduction, w));
            });
        }

        std::optional<Decision> seen;
        for (auto & s : report.stages) {
            if (s.decision == Decision::timeout)
                continue;
            if (seen && *seen != s.decision)
                report.decisions_agree = false;
            seen = s.decision;
        }

        report.consistent = report.decisions_agree;
        for (auto & [name, ok] : checks)
            report.consistent = report.consistent && ok;
        return report;
    }

    auto bench_si(const vector<int> & sizes, uint64_t seed, const BenchOptions & options) -> string
    {
        std::ostringstream out;
        out << "n,instance,nodes,wall_ms,decision\n";

        for (int n : sizes) {
            for (int id = 0 ; id < options.instances_per_size ; ++id) {
                std::mt19937_64 rng{ seed ^ (uint64_t(n) << 32) ^ uint64_t(id) };
                auto pattern = random_graph(RandomSpec{ n, 3, rng() });
                auto host = random_gnp(2 * n, 1, 3, rng);

                auto start = std::chrono::steady_clock::now();
                auto outcome = solve_si(pattern, host, options.budget);
                double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

                out << n << ',' << id << ',' << outcome.nodes << ',';
                if (options.timing) {
                    char buffer[32];
                    std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
                    out << buffer;
                }
                else
                    out << '-';
                out << ',' << decision_name(outcome.decision) << '\n';
            }
        }

        return out.str();
    }
}
