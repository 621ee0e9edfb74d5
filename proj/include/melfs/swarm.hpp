#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "melfs/classifier.hpp"
#include "melfs/mask.hpp"
#include "melfs/rng.hpp"

namespace melfs {

/// Kinematic constants shared by the whole swarm.
struct PsoParams {
    double omega = 0.9;   // inertia weight
    double c1 = 2.0;      // cognitive learning factor
    double c2 = 2.0;      // social learning factor
    double c3 = 2.0;      // cross-subpopulation learning factor
    double lb = 0.0;      // position lower bound
    double ub = 1.0;      // position upper bound
    double v_max = 0.5;   // velocity clamp, (ub - lb) / 2
    double theta = 0.6;   // binarization threshold

    void validate() const;
};

/// One candidate solution: a real-valued point in feature space plus the
/// binary mask it was last evaluated with and its personal-best record.
struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    FeatureMask mask;
    FeatureMask prev_mask;
    double prev_accuracy = 0.0;
    std::vector<double> pbest_position;
    double pbest_fitness = std::numeric_limits<double>::infinity();
};

/// Best-so-far snapshot usable as an attractor in the velocity updates.
struct BestEntry {
    std::vector<double> position;
    FeatureMask mask;
    double fitness = std::numeric_limits<double>::infinity();
    double accuracy = 0.0;
};

/// Per-subpopulation and global bests. Fitness is minimized; the global
/// record never exceeds any subpopulation record.
struct BestRecords {
    explicit BestRecords(std::size_t n_subpopulations) : sub(n_subpopulations) {}
    std::vector<BestEntry> sub;
    BestEntry global;
};

/// Positions i.i.d. uniform on [lb,ub], velocities on [-v_max, v_max],
/// masks derived by binarize. np must be even so the population splits into
/// two equal subpopulations.
std::vector<Particle> init_population(std::size_t np, std::size_t dims,
                                      const PsoParams& params, Rng& rng);
std::vector<Particle> init_population(std::size_t np, std::size_t dims,
                                      const PsoParams& params, std::uint64_t seed);

/// mask[n] = 1 iff position[n] > theta (strict).
FeatureMask binarize(std::span<const double> position, double theta);

/// Empty-mask fallback: force-select the coordinate with the maximum
/// position value (lowest index on ties). No-op for nonempty masks.
void repair_mask(FeatureMask& mask, std::span<const double> position);

/// Canonical position for a mask built outside the kinematics (roulette
/// masks): selected -> ub, dropped -> lb, so binarize(position) == mask.
std::vector<double> mask_to_position(const FeatureMask& mask, const PsoParams& params);

/// Canonical velocity/position update. One fresh (r1, r2) pair per
/// coordinate; velocity clamped to +/- v_max, position to [lb, ub].
void pso_step(Particle& p, std::span<const double> pbest, std::span<const double> gbest,
              const PsoParams& params, UniformSource& uniform);

/// As pso_step with an added c3*r3*(sbest - x) pull toward the other
/// subpopulation's best. r3 is drawn only when c3 != 0 so that c3 = 0
/// reproduces pso_step on the same random stream.
void mel_step(Particle& p, std::span<const double> pbest, std::span<const double> gbest,
              std::span<const double> sbest, const PsoParams& params,
              UniformSource& uniform);

/// Replaces a record iff the new fitness is strictly lower; ties keep the
/// incumbent. Updates the subpopulation record and the global record.
void update_bests(BestRecords& records, std::size_t sub_index,
                  const std::vector<double>& position, const FeatureMask& mask,
                  const EvalOutcome& outcome);

}  // namespace melfs
