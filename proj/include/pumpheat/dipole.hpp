#pragma once

namespace pumpheat {

// Dipole emission pattern projected on the trap axis:
// N(u) = 3/8 (1 + u^2) on u in [-1, 1], normalized to 1.

double dipole_pdf(double u);

// F(u) = (u^3 + 3u + 4)/8, monotone on [-1, 1]
double dipole_cdf(double u);

// Inverse CDF; maps r in [0, 1] to u in [-1, 1] with one cubic root solve.
double dipole_quantile(double r);

}  // namespace pumpheat
