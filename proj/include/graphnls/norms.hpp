#pragma once

#include <limits>

#include "graphnls/graph_function.hpp"

namespace graphnls {

// Composite trapezoid approximation of the graph L^p norm; p = infinity
// returns the per-edge sup of samples.
double lp_norm(const GraphFunction& f, double p);

// Integral of |f|^p (the p-th power of lp_norm for finite p).
double lp_pow(const GraphFunction& f, double p);

// Exact Dirichlet energy of the piecewise-linear interpolant.
double grad_sq_norm(const GraphFunction& f);

// sqrt(||f||_2^2 + ||Df||_2^2).
double h1_norm(const GraphFunction& f);

// Discrete H1 inner product <f, g>, conjugate-linear in f.
cplx h1_inner(const GraphFunction& f, const GraphFunction& g);

// min over theta of || f - e^{i theta} g ||_{H1}; theta* is the argument of
// <g, f>_{H1}, so the minimized quadratic is exact.
double orbital_distance(const GraphFunction& f, const GraphFunction& g);

inline constexpr double inf_p = std::numeric_limits<double>::infinity();

}  // namespace graphnls
