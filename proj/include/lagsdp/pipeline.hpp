#pragma once

#include <optional>
#include <string>

#include "lagsdp/graph.hpp"
#include "lagsdp/report.hpp"
#include "lagsdp/sdp_relax.hpp"
#include "lagsdp/solvers.hpp"

namespace lagsdp {

enum class SolverKind { Dsg, Asg, Bundle };

std::string solver_name(SolverKind kind);

struct PipelineOptions {
    std::optional<int> max_iter;
    std::optional<double> eps;     // step tolerance override
    std::optional<double> mu0;
    std::optional<double> kappa;
    std::optional<double> rho;
    std::optional<double> opt;     // known optimum, enables rel_gap_closed
    std::optional<EdgePacking> packing; // bypass the violation heuristic
    AdmmOptions admm;
};

struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage(stage) {}
    std::string stage;
};

// Per-solver defaults keyed on n (mu and kappa switch at n = 100); the DSG
// stopping pair is (eps = 0.01, N_stag = 100), ASG uses (1e-3, 15), the
// bundle runs at most 600 iterations with gap tolerance 1e-3 and rho = 1/2.
SolverConfig default_config(SolverKind kind, int n);

// ADMM relaxation -> rounding/search heuristic (U*) -> violation-guided
// edge packing -> level-p instance -> chosen dual solver, all stages seeded
// from `seed`. The warm start is the ADMM dual multiplier.
RunReport run_pipeline(const GraphInstance& g, const std::string& instance_id, int k, int p,
                       SolverKind solver, uint64_t seed, const PipelineOptions& opts = {});

} // namespace lagsdp
