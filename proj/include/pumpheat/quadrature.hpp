#pragma once

#include <vector>

namespace pumpheat {

// Gauss-Legendre rule on [-1, 1]; exact for polynomials up to degree
// 2*order - 1, weights sum to 2.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // positive
};

QuadratureRule gauss_legendre(int order);

}  // namespace pumpheat
