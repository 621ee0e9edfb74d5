#include "melfs/mel.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "melfs/feature_weights.hpp"
#include "melfs/parallel.hpp"
#include "melfs/rng.hpp"

namespace melfs {

void MelConfig::validate() const {
    if (np < 2 || np % 2 != 0)
        throw std::invalid_argument("population size must be even and at least 2");
    if (iterations < 1) throw std::invalid_argument("iteration count must be at least 1");
    if (alpha < 0.0 || beta < 0.0 || std::abs(alpha + beta - 1.0) > 1e-9)
        throw std::invalid_argument("alpha + beta must equal 1");
    if (k_nn < 1) throw std::invalid_argument("k_nn must be at least 1");
    if (cv_folds < 2) throw std::invalid_argument("cv_folds must be at least 2");
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    pso.validate();
}

double fitness(double error_rate, std::size_t n_selected, std::size_t n_total,
               double alpha, double beta) {
    if (n_selected == 0) throw std::invalid_argument("fitness requires a nonempty subset");
    if (n_selected > n_total) throw std::invalid_argument("subset larger than feature space");
    return alpha * error_rate +
           beta * (static_cast<double>(n_selected) / static_cast<double>(n_total));
}

EvalOutcome evaluate(const FeatureMask& mask, const Dataset& ds, const FoldPlan& plan,
                     const MelConfig& cfg) {
    EvalOutcome out;
    out.accuracy = cv_accuracy(ds, mask, plan, cfg.k_nn);
    out.error_rate = 1.0 - out.accuracy;
    out.n_selected = count_selected(mask);
    out.fitness = fitness(out.error_rate, out.n_selected, ds.n_features, cfg.alpha, cfg.beta);
    return out;
}

namespace {

struct RunState {
    std::vector<Particle> swarm;
    BestRecords records;
    std::vector<EvalOutcome> outcomes;  // scratch, one slot per particle
    std::size_t evaluations = 0;
};

void evaluate_range(RunState& st, std::size_t begin, std::size_t end, const Dataset& ds,
                    const FoldPlan& plan, const MelConfig& cfg) {
    parallel_for(end - begin, [&](std::size_t i) {
        const std::size_t p = begin + i;
        st.outcomes[p] = evaluate(st.swarm[p].mask, ds, plan, cfg);
    });
    st.evaluations += end - begin;
}

/// Serial bookkeeping after a batch evaluation: weight deltas (optional),
/// previous-round state, personal bests, shared best records. Applied in
/// ascending particle-index order so runs are scheduler-independent.
void absorb_outcomes(RunState& st, std::size_t begin, std::size_t end,
                     std::size_t sub_index, FeatureWeights* weights) {
    for (std::size_t i = begin; i < end; ++i) {
        Particle& p = st.swarm[i];
        const EvalOutcome& out = st.outcomes[i];
        if (weights != nullptr) {
            const MaskDelta delta = mask_delta(p.prev_mask, p.mask);
            update_weights(*weights, delta, p.prev_accuracy, out.accuracy);
        }
        p.prev_mask = p.mask;
        p.prev_accuracy = out.accuracy;
        if (out.fitness < p.pbest_fitness) {
            p.pbest_fitness = out.fitness;
            p.pbest_position = p.position;
        }
        update_bests(st.records, sub_index, p.position, p.mask, out);
    }
}

void seed_initial_state(RunState& st, std::size_t half) {
    for (std::size_t i = 0; i < st.swarm.size(); ++i) {
        Particle& p = st.swarm[i];
        const EvalOutcome& out = st.outcomes[i];
        p.prev_mask = p.mask;
        p.prev_accuracy = out.accuracy;
        p.pbest_position = p.position;
        p.pbest_fitness = out.fitness;
        update_bests(st.records, i < half ? 0 : 1, p.position, p.mask, out);
    }
}

TracePoint snapshot(const BestRecords& records) {
    return {records.global.fitness, records.global.accuracy,
            count_selected(records.global.mask)};
}

RunReport finish_report(const RunState& st, std::vector<TracePoint> trace,
                        std::chrono::steady_clock::time_point t0) {
    RunReport report;
    report.best_mask = st.records.global.mask;
    report.best_accuracy = st.records.global.accuracy;
    report.best_subset_size = count_selected(st.records.global.mask);
    report.best_fitness = st.records.global.fitness;
    report.trace = std::move(trace);
    report.evaluations = st.evaluations;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace

RunReport run_mel(const Dataset& ds, const MelConfig& cfg,
                  const WeightObserver& observe_weights) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const FoldPlan plan = stratified_kfold(ds, cfg.cv_folds, cfg.seed);
    Rng rng(cfg.seed);

    RunState st{init_population(cfg.np, ds.n_features, cfg.pso, rng), BestRecords(2), {}, 0};
    st.outcomes.resize(cfg.np);
    const std::size_t half = cfg.np / 2;

    FeatureWeights weights(ds.n_features);

    for (auto& p : st.swarm) repair_mask(p.mask, p.position);
    evaluate_range(st, 0, cfg.np, ds, plan, cfg);
    seed_initial_state(st, half);

    std::vector<TracePoint> trace;
    trace.reserve(cfg.iterations + 1);
    trace.push_back(snapshot(st.records));

    for (std::size_t t = 1; t <= cfg.iterations; ++t) {
        // Sub1: kinematic search pulled toward Sub2's best. Attractors are
        // frozen at the generation barrier.
        const std::vector<double> gbest = st.records.global.position;
        const std::vector<double> sbest = st.records.sub[1].position;
        for (std::size_t i = 0; i < half; ++i) {
            Particle& p = st.swarm[i];
            mel_step(p, p.pbest_position, gbest, sbest, cfg.pso, rng);
            p.mask = binarize(p.position, cfg.pso.theta);
            repair_mask(p.mask, p.position);
        }
        evaluate_range(st, 0, half, ds, plan, cfg);
        absorb_outcomes(st, 0, half, 0, &weights);

        // Sub2: fresh masks from the shared weights, which already include
        // this generation's Sub1 updates.
        for (std::size_t i = half; i < cfg.np; ++i) {
            Particle& p = st.swarm[i];
            p.mask = roulette_sample(weights, rng);
            p.position = mask_to_position(p.mask, cfg.pso);
        }
        evaluate_range(st, half, cfg.np, ds, plan, cfg);
        absorb_outcomes(st, half, cfg.np, 1, &weights);

        trace.push_back(snapshot(st.records));
        if (observe_weights) observe_weights(t, weights.w);
    }

    return finish_report(st, std::move(trace), t0);
}

RunReport run_pso_baseline(const Dataset& ds, const MelConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const FoldPlan plan = stratified_kfold(ds, cfg.cv_folds, cfg.seed);
    Rng rng(cfg.seed);

    RunState st{init_population(cfg.np, ds.n_features, cfg.pso, rng), BestRecords(1), {}, 0};
    st.outcomes.resize(cfg.np);

    for (auto& p : st.swarm) repair_mask(p.mask, p.position);
    evaluate_range(st, 0, cfg.np, ds, plan, cfg);
    seed_initial_state(st, cfg.np);  // single subpopulation

    std::vector<TracePoint> trace;
    trace.reserve(cfg.iterations + 1);
    trace.push_back(snapshot(st.records));

    for (std::size_t t = 1; t <= cfg.iterations; ++t) {
        const std::vector<double> gbest = st.records.global.position;
        for (auto& p : st.swarm) {
            pso_step(p, p.pbest_position, gbest, cfg.pso, rng);
            p.mask = binarize(p.position, cfg.pso.theta);
            repair_mask(p.mask, p.position);
        }
        evaluate_range(st, 0, cfg.np, ds, plan, cfg);
        absorb_outcomes(st, 0, cfg.np, 0, nullptr);
        trace.push_back(snapshot(st.records));
    }

    return finish_report(st, std::move(trace), t0);
}

}  // namespace melfs
