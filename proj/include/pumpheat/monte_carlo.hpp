#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "pumpheat/pump_solver.hpp"
#include "pumpheat/scheme.hpp"

namespace pumpheat {

struct TrajectoryConfig {
    SchemeParams params;
    std::optional<MultilevelParams> multilevel;
    // Waiting rate in the auxiliary state |1> (units nu); defaults to
    // params.gamma_e_over_nu. The final distribution is rate-independent,
    // only the jump timing changes.
    std::optional<double> gamma_1_over_nu;
    long n_trajectories = 10000;
    std::uint64_t seed = 0;
    int n_max = -1;  // -1: initial_n_max(params)
    long max_jumps = 100000;
    int n_threads = 0;  // 0: hardware concurrency; result independent of it

    void validate() const;
    double effective_p_e() const;  // params.p_e, or the multilevel reduction
};

struct TrajectoryEnsemble {
    TrajectoryConfig config;
    int n_max = 0;
    Eigen::VectorXd final_populations;    // ensemble mean, sums to 1
    Eigen::VectorXd population_variance;  // per-bin across-trajectory variance
    double mean_shift = 0.0, stderr_shift = 0.0;            // units nu
    double variance_estimate = 0.0, stderr_variance = 0.0;  // nu^2, jackknife SE
    double mean_jump_count = 0.0, stderr_jump_count = 0.0;
    long included_trajectories = 0;
    long excluded_trajectories = 0;     // hit max_jumps; dropped from statistics
    double max_truncation_loss = 0.0;   // worst per-trajectory norm loss
};

// Quantum-jump unraveling of the pulse. Each trajectory starts in the
// driven state at Fock level n0, evolves freely (phase exp(-i s nu tau) per
// Fock amplitude) for exponentially distributed waiting times, receives the
// signed kick exp(-i eta (1+u)(a^+ + a)) at each jump with u drawn from the
// dipole pattern, and terminates when the internal state decays to |g>.
// Identical seed gives bit-identical results for any n_threads: every
// trajectory owns an RNG stream derived from (seed, index) and reductions
// run in fixed index order.
TrajectoryEnsemble run_ensemble(const TrajectoryConfig& cfg);

// One draw from the emission-direction density N(u) = 3/8 (1 + u^2).
double sample_emission_direction(std::mt19937_64& rng);

struct SolverComparison {
    double tv_distance = 0.0;   // vs the solver distribution
    double tv_threshold = 0.0;  // (1-significance) quantile of multinomial replicates
    double z_shift = 0.0;
    double z_variance = 0.0;
    double max_abs_bin_z = 0.0;
    int compared_bins = 0;
    double significance = 0.05;
    bool pass = false;  // tv within threshold and |z_shift| <= 3
};

// Statistical comparison of the ensemble against the deterministic
// distribution with matching (eta, p_e, n0). The TV reference distribution
// is a seeded parametric bootstrap: n_trajectories multinomial draws from
// the solver distribution, repeated; the ensemble's own TV fluctuations are
// never larger, so the threshold is conservative.
SolverComparison compare_to_solver(const TrajectoryEnsemble& ens,
                                   const PumpDistribution& d,
                                   double significance = 0.05);

}  // namespace pumpheat
