#pragma once

#include "graphnls/graph_function.hpp"

namespace graphnls {

// All variational quantities of a graph function at frequency omega.
// Identities that hold by construction:
//   action = energy + omega * mass
//   reduced_action = action - nehari / 2 = mu/(2mu+2) ||f||_{2mu+2}^{2mu+2}
struct FunctionalReport {
    double mass;              // M = ||f||_2^2 / 2
    double energy;            // E, with the alpha |f(0)|^2 / 2 vertex term
    double kirchhoff_energy;  // E^0, vertex term dropped
    double action;            // S_omega = E + omega M
    double nehari;            // I_omega
    double kirchhoff_nehari;  // I^0_omega
    double reduced_action;    // S~ = S_omega - I_omega / 2
    double omega;
};

FunctionalReport evaluate(const GraphFunction& f, double omega);

// Scales f onto the Nehari manifold: beta such that I_omega[beta f] = 0,
// beta = ((||f'||^2 + alpha |f(0)|^2 + omega ||f||^2) / ||f||_{2mu+2}^{2mu+2})^{1/(2mu)}.
// Requires a positive numerator (guaranteed for omega > alpha^2 / N^2).
std::pair<GraphFunction, double> nehari_project(const GraphFunction& f,
                                                double omega);

// Infimum of the Kirchhoff action on its Nehari manifold:
// d0(omega) = (mu+1)^{1/mu} omega^{1/mu + 1/2} int_0^1 (1-t^2)^{1/mu} dt.
double d0(double omega, double mu);

// The line infimum; numerically identical to d0, kept as a separate entry
// point because only the inequality 2 d_half >= d_line is ever used.
double d_line(double omega, double mu);

// Threshold alpha* in (-N sqrt(omega), 0) solving
//   int_0^1 (1-t^2)^{1/mu} dt = (N/2) int_{|a*|/(N sqrt(omega))}^1 (1-t^2)^{1/mu} dt
// by bisection. N = 2 is degenerate and returns 0.
double alpha_star(double omega, double mu, int N);

}  // namespace graphnls
