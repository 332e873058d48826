#pragma once

#include <Eigen/Dense>
#include <span>

namespace pumpheat {

// Truncated harmonic-oscillator basis {|0>, ..., |n_max>}. Level s has
// energy s in trap units (hbar = 1, nu = 1).
struct FockBasis {
    int n_max = 0;
    int dim() const { return n_max + 1; }
};

// Signed real reduced matrix elements of the displacement generated by
// beta (a^+ + a): the full amplitude is
//   <n+d| exp(i beta (a^+ + a)) |n> = i^d f_n,
// with f_n = beta^d sqrt(n!/(n+d)!) e^{-beta^2/2} L_n^{(d)}(beta^2).
// Fills out[n] = f_n for n = 0 .. out.size()-1. Evaluated by an upward
// three-term recurrence in the Laguerre degree applied directly to the
// scaled values (|f_n| <= 1), seeded in log space, so no factorial of a
// large argument is ever formed.
void displacement_diagonal(double beta, int d, std::span<double> out);

// |<m| exp(i beta (a^+ + a)) |n>|^2 over the truncated basis; symmetric,
// entries in [0, 1], columns substochastic. Even in beta.
Eigen::MatrixXd displacement_magnitude_sq(double beta, int n_max);

}  // namespace pumpheat
