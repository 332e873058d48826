#pragma once

#include <Eigen/Dense>

#include "pumpheat/quadrature.hpp"

namespace pumpheat {

// Diagonal single-scattering map on the truncated Fock basis:
//   T[s][n] = Int_{-1}^{1} du N(u) |<s| exp(i eta (1+u)(a^+ + a)) |n>|^2.
// Columns are substochastic; the defect of each column sum from 1 is the
// truncation leakage past n_max.
struct ScatteringKernel {
    double eta = 0.0;
    int n_max = 0;
    int quad_order = 0;
    Eigen::MatrixXd matrix;          // (n_max+1) x (n_max+1)
    Eigen::VectorXd column_leakage;  // max(0, 1 - column sum)
    double quad_doubling_residual = 0.0;  // max entry change at 2x order

    int dim() const { return n_max + 1; }
    double max_leakage() const { return column_leakage.maxCoeff(); }
};

// Assembles T and verifies every entry is stable to <= 1e-12 under a
// doubling of the quadrature order; throws std::runtime_error otherwise.
ScatteringKernel build_kernel(double eta, int n_max, const QuadratureRule& quad);
ScatteringKernel build_kernel(double eta, int n_max, int quad_order = 32);

}  // namespace pumpheat
