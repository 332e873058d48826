#pragma once

#include <optional>

namespace pumpheat {

// Physical inputs of one repumping pulse. Energies are in trap quanta
// (hbar = 1, nu = 1), so eta = k a0 = sqrt(omega_R / nu).
struct SchemeParams {
    double eta = 0.1;  // Lamb-Dicke parameter
    double p_e = 0.0;  // probability of decaying back to the driven state
    int n0 = 0;        // initial Fock level
    double gamma_e_over_nu = 0.05;  // effective linewidth ratio (Monte Carlo only)

    double p_g() const { return 1.0 - p_e; }
    void validate() const;  // throws std::invalid_argument
};

// Throws if p_e = 1 (no decay channel to |g>: the pulse never terminates
// and no steady state exists).
void require_steady_state(const SchemeParams& p);

// Branching probabilities of the multilevel schemes: decay into the driven
// state |e>, into the auxiliary stable state |1>, and into |g>. a_ratio is
// the scattering-rate ratio between the two excited states when a second
// one is coupled in; absent for the single-excited-state scheme.
struct MultilevelParams {
    double p_e_prime = 0.0;
    double p_1 = 0.0;
    double p_g_prime = 1.0;
    std::optional<double> a_ratio;

    void validate() const;
};

enum class MomentSource { closed_form, kernel_series, monte_carlo };
const char* to_string(MomentSource s);

struct MomentReport {
    double delta_E = 0.0;            // units nu
    double sigma2_E = 0.0;           // units nu^2
    double sigma2_first_term = 0.0;  // k_eff-description part of the variance
    double k_eff_over_k = 0.0;
    MomentSource source = MomentSource::closed_form;
    // Relative error of the shift against the closed form (numeric sources).
    std::optional<double> rel_err_vs_closed_form;
};

}  // namespace pumpheat
