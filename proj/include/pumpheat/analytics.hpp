#pragma once

#include "pumpheat/scheme.hpp"

namespace pumpheat {

// Mean energy gain per scattering in trap units:
//   c = eta^2 E[(1+u)^2] = (7/5) eta^2.
double mean_kick(double eta);

// Variance of the per-scattering energy gain beta^2 = eta^2 (1+u)^2:
//   Var(beta^2) = (E[(1+u)^4] - E[(1+u)^2]^2) eta^4 = (297/175) eta^4.
double kick_variance(double eta);

// Average motional-energy shift after the full pulse (units nu):
//   dE = eta^2 (7/5) / (1 - p_e); independent of n0.
double shift_closed_form(const SchemeParams& p);

struct VarianceTerms {
    double total = 0.0;       // units nu^2
    double first_term = 0.0;  // eta^2 (7/5)(2 n0 + 1)/(1 - p_e)
};

// Compact closed form of the energy variance (units nu^2):
//   eta^2 (7/5)(2n+1)/(1-p_e) + (7 eta^2/5)^2 (58/49) p_e/(1-p_e)^2.
// The first term alone is the k_eff (single effective kick) description.
VarianceTerms variance_closed_form(const SchemeParams& p);

// Exact second moment of the multiple-scattering chain (units nu^2):
//   [ c(2n+1) + Var(beta^2) ]/(1-p_e) + 3 c^2 p_e/(1-p_e)^2,
// with c = mean_kick(eta). Agrees with variance_closed_form at O(eta^2)
// but differs at O(eta^4); this is the form the Fock-space solver and the
// trajectory ensemble reproduce, and it serves as their deterministic
// oracle. See README for the relation between the two.
double variance_exact_sum_rule(const SchemeParams& p);

// Effective wave vector of the whole multi-scattering repump, units of k:
//   k_eff/k = sqrt(7/5) / sqrt(1 - p_e).
double k_eff(const SchemeParams& p);

// Effective Lamb-Dicke parameter eta_eff = eta * k_eff/k.
double eta_eff(const SchemeParams& p);

// Whether a coherent pulse whose two-photon wave vector has projection
// k_x_coh (in units of k) on the trap axis can counteract the average
// repump kick: k_x_coh >= k_eff. At k_x_coh = 2k this holds up to
// p_e = 13/20 exactly.
bool confinement_condition(const SchemeParams& p, double k_x_coh_over_k);

// Reduction of the multilevel schemes to a single effective p_e.
// Without a_ratio (one excited state, extra decay channel |1>):
//   p_e = p_e' + p_1.
// With a_ratio (second excited state sharing the recycling lasers):
//   p_e = (p_e' + p_1) a/(1+a) + 1/(1+a),
// strictly decreasing in a when p_e' + p_1 < 1.
double effective_pe_multilevel(const MultilevelParams& m);

// Contribution to the shift from paths with exactly m scatterings:
//   B_m = p_g p_e^(m-1) (7/5) eta^2 m; independent of n0.
double shift_term(const SchemeParams& p, int m);

// Compact closed-form contribution to the variance from m-scattering paths:
//   A_m = p_g p_e^(m-1) [ (7/5) eta^2 (2n+1) m + (7 eta^2/5)^2 (29/49) m(m-1) ].
double variance_term(const SchemeParams& p, int m);

// Exact m-scattering variance contribution (same centering dE as above):
//   p_g p_e^(m-1) [ c(2n+1)m + Var(beta^2) m + c^2 m(m-1) + (m c - dE)^2 ].
double variance_term_exact(const SchemeParams& p, int m);

MomentReport closed_form_report(const SchemeParams& p);

}  // namespace pumpheat
