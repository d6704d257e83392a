#pragma once

#include <functional>

namespace graphnls::quad {

// Adaptive Gauss quadrature: a 15-point Gauss-Legendre panel whose error is
// estimated against its two halves; panels are bisected until the estimate
// drops below the local tolerance share. Handles the endpoint derivative
// singularity of (1 - t^2)^{1/mu} for mu > 1 by subdivision alone.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// int_lo^1 (1 - t^2)^expo dt, the profile integral behind d0, the state
// actions and the VK slope (expo = 1/mu or 1/mu - 1, lo in (-1, 1]).
double profile_integral(double lo, double expo, double tol = 1e-12);

}  // namespace graphnls::quad
