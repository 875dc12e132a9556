#pragma once

#include <array>
#include <functional>

namespace perfhom {

/// Integral of f over the hole boundary Gamma = {|y| = Theta} in cell
/// coordinates: trapezoid rule on the circle (d=2), Gauss-Legendre x
/// trapezoid product rule on the sphere (d=3). Exact for constants by
/// construction. N_q >= 16.
double circle_quadrature(const std::function<double(const std::array<double, 3>&)>& f,
                         double Theta, int n_q, int dim);

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, double* nodes, double* weights);

}  // namespace perfhom
