#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "melfs/classifier.hpp"
#include "melfs/dataset.hpp"
#include "melfs/mask.hpp"
#include "melfs/swarm.hpp"

namespace melfs {

/// Full run configuration. Defaults follow the benchmark protocol:
/// NP = 20, T = 100, theta = 0.6, 3-NN, 5-fold CV, alpha/beta = 0.9/0.1.
struct MelConfig {
    std::size_t np = 20;          // population size, even
    std::size_t iterations = 100; // generations after the initial evaluation
    PsoParams pso;
    double alpha = 0.9;           // fitness weight on the error rate
    double beta = 0.1;            // fitness weight on the subset fraction
    int k_nn = 3;
    int cv_folds = 5;
    std::uint64_t seed = 0;
    std::size_t repeats = 10;     // used by the harness, not by single runs

    void validate() const;
};

struct TracePoint {
    double best_fitness = 0.0;
    double best_accuracy = 0.0;
    std::size_t best_subset_size = 0;
};

/// Outcome of one optimization run. trace[t] is the global best after
/// iteration t, with t = 0 the state right after the initial evaluation.
struct RunReport {
    FeatureMask best_mask;
    double best_accuracy = 0.0;
    std::size_t best_subset_size = 0;
    double best_fitness = 0.0;
    std::vector<TracePoint> trace;
    double wall_time_seconds = 0.0;
    std::size_t evaluations = 0;  // np * (iterations + 1)
};

/// f = alpha * error_rate + beta * (n_selected / n_total), minimized.
double fitness(double error_rate, std::size_t n_selected, std::size_t n_total,
               double alpha, double beta);

/// Cross-validated accuracy plus the fitness value for one mask. Pure given
/// (mask, ds, plan, cfg).
EvalOutcome evaluate(const FeatureMask& mask, const Dataset& ds, const FoldPlan& plan,
                     const MelConfig& cfg);

/// Observer for the shared weight vector, called once per generation.
using WeightObserver = std::function<void(std::size_t iteration, const std::vector<double>& w)>;

/// Two-subpopulation run: Sub1 moves by PSO kinematics with the extra pull
/// toward Sub2's best, Sub2 resamples masks from the shared feature weights
/// each generation. Deterministic for a fixed (ds, cfg).
RunReport run_mel(const Dataset& ds, const MelConfig& cfg,
                  const WeightObserver& observe_weights = {});

/// Single-population PSO under the same fitness, evaluation and repair
/// machinery; no weight learning. c3 is ignored.
RunReport run_pso_baseline(const Dataset& ds, const MelConfig& cfg);

}  // namespace melfs
