#pragma once

#include <vector>

#include "graphnls/graph_function.hpp"

namespace graphnls {

// Soliton profile on the line,
// phi_s(x) = ((mu+1) omega)^{1/(2mu)} sech^{1/mu}(mu sqrt(omega) x).
double soliton_profile(double x, double omega, double mu);

// One branch of the stationary family Psi_{omega,j}: j bump edges carrying
// phi_s(x - a_j) followed by N - j tail edges carrying phi_s(x + a_j), with
// the shift a_j fixed by tanh(mu sqrt(omega) a_j) sum(eps) = alpha/sqrt(omega).
// Bumps occupy the lowest-indexed edges (canonical representative; the
// family is defined up to edge permutations).
struct StationarySpec {
    StarGraphParams params;
    int j;
    double omega;
    double a_j;
    std::vector<int> epsilon;

    StationarySpec(const StarGraphParams& p, int j_, double omega_);
};

GraphFunction build_state(const StationarySpec& spec, const GridSpec& grid);

// Closed-form action S_omega[Psi_{omega,j}] assembled from
// int_0^inf |phi_s(x + xi)|^{2mu+2} dx.
double state_action(const StationarySpec& spec);

// Closed-form ||Psi_{omega,j}||_2^2 from int_0^inf |phi_s(x + xi)|^2 dx.
double state_l2_squared(const StationarySpec& spec);

// Relative defect of the Nehari identity
// ||Psi'||^2 + alpha |psi(0)|^2 + omega ||Psi||^2 - ||Psi||_{2mu+2}^{2mu+2},
// with every term from an independent closed-form tail integral. Zero up to
// quadrature error for a genuine member of the family.
double state_nehari_residual(const StationarySpec& spec);

// Kirchhoff critical points: N odd admits only the a = 0 glued half-soliton
// state; N even has the one-parameter family with N/2 bumps shifted by a.
GraphFunction kirchhoff_state(int N, double omega, double mu, double a,
                              const GridSpec& grid);

// Analytic d/domega ||Psi_{omega,0}||^2, the Vakhitov-Kolokolov slope.
double vk_slope(double omega, const StarGraphParams& params);

// Combined stationarity defect: discrete L2 norm of
// H f - |f|^{2mu} f + omega f over interior nodes plus the one-sided O(dx^2)
// vertex flux defect |sum psi_i'(0) - alpha psi(0)|.
double residual(const GraphFunction& f, double omega,
                const StarGraphParams& params);

struct EscapeResult {
    double reduced_action;  // S~[delta_n Phi_n]
    double delta_n;         // Nehari scaling of the shifted soliton
};

// Soliton-like trial function phi_s(x - n) chi(x) on edge 1, projected onto
// the Kirchhoff Nehari manifold; its reduced action approaches d0(omega).
EscapeResult escape_demo(int n, double omega, double mu, int N,
                         const GridSpec& grid);

}  // namespace graphnls
