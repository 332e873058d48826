#pragma once

#include <Eigen/Dense>

#include "pumpheat/kernel.hpp"
#include "pumpheat/scheme.hpp"

namespace pumpheat {

enum class SolveMethod { series, linear_solve };
const char* to_string(SolveMethod m);

// Final motional distribution over |g, s> at the end of the pulse.
struct PumpDistribution {
    Eigen::VectorXd probs;  // index s = 0 .. n_max
    int n0 = 0;
    SchemeParams params;
    double total_mass = 0.0;
    double leakage = 0.0;  // 1 - total_mass: truncation loss + series tail
    SolveMethod method = SolveMethod::series;
};

// Geometric series sum_{m>=1} p_g p_e^(m-1) T^m e_{n0}, truncated once the
// remaining tail bound p_e^M / (1 - p_e) drops below tol.
PumpDistribution solve_series(const ScatteringKernel& k, const SchemeParams& p,
                              double tol = 1e-10);

// The same distribution by the resummed linear solve
//   p_g T (I - p_e T)^{-1} e_{n0};
// agrees with solve_series entrywise to max(tol, 1e-10).
PumpDistribution solve_linear(const ScatteringKernel& k, const SchemeParams& p);

// Numeric shift and variance of a distribution (units nu, nu^2):
//   dE = sum_s (s - n0) probs[s],  sigma2 = sum_s (s - n0 - dE)^2 probs[s].
// Refuses (throws std::runtime_error) if leakage > leak_tol, since the
// moments would be biased by the missing mass.
MomentReport moments(const PumpDistribution& d, double leak_tol = 1e-8);

// m-fold kernel contractions of the per-order moment terms, computed by
// explicit matrix application (the independent check of the closed forms):
//   shift_term    = p_g p_e^(m-1) sum_s (s - n0) (T^m)[s, n0]
//   variance_term = p_g p_e^(m-1) sum_s (s - n0 - dE)^2 (T^m)[s, n0]
// with dE the closed-form shift.
struct OrderTerms {
    double shift_term = 0.0;
    double variance_term = 0.0;
};
OrderTerms order_terms_brute_force(const ScatteringKernel& k,
                                   const SchemeParams& p, int m);

// Basis-size heuristic: n0 + ceil(40 (1 + 2 eta)^2 / (1 - p_e)). The mean
// number of scatterings is 1/(1 - p_e) and each kick displaces by at most
// 2 eta, so the support grows linearly in both.
int initial_n_max(const SchemeParams& p);

struct ConvergedSolve {
    PumpDistribution dist;
    ScatteringKernel kernel;  // converged kernel, reusable for other n0
    int doublings = 0;
};

// Starts from initial_n_max and doubles the basis until (a) the kernel
// leakage of every column visited with weight > 1e-10 and the leakage of
// the distribution are <= leak_tol, and (b) the two lowest moments are
// stable between doublings to relative moment_rtol.
ConvergedSolve solve_auto(const SchemeParams& p, double series_tol = 1e-10,
                          double leak_tol = 1e-8, double moment_rtol = 1e-8,
                          int quad_order = 32);

}  // namespace pumpheat
