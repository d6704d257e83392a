#pragma once

#include <vector>

#include "graphnls/stationary.hpp"

namespace graphnls {

// Discrete linearization operators around the ground state, in the
// weight-normalized basis B = W^{-1/2} A W^{-1/2} + diag(omega - c |Psi|^{2mu}),
// c = 1 for l_plus (kernel = ground state) and c = 2mu+1 for l_minus
// (Morse index 1). Symmetric by construction. Note the +/- labels are tied
// to the c coefficient above, not to the sign convention some texts use.
struct LinearizationPair {
    int n = 0;
    GridSpec grid;
    StationarySpec spec;
    std::vector<double> l_plus, l_minus;  // dense row-major n x n
    std::vector<double> low_spectrum_plus, low_spectrum_minus;
    std::vector<std::vector<double>> evecs_plus, evecs_minus;
    double kernel_residual_plus = 0.0;  // ||L_+ Psi||_W / ||Psi||_W
};

LinearizationPair assemble(const StationarySpec& spec, const GridSpec& grid,
                           int k = 6);

// Kernel residual alone (matrix-free), for grid-refinement studies.
double kernel_residual(const StationarySpec& spec, const GridSpec& grid);

struct VkCheck {
    double analytic;  // closed-form VK slope
    double numeric;   // central difference of ||Psi_{omega,0}||^2
};

VkCheck vk_check(const StarGraphParams& params, double omega, double d_omega);

struct MorseReport {
    int neg_plus = 0;
    int neg_minus = 0;
    double kernel_residual_plus = 0.0;
    double second_minus = 0.0;  // second lowest eigenvalue of l_minus
    bool conclusive = false;    // margin check on the last computed eigenvalue
};

MorseReport morse_report(const LinearizationPair& pair);

// k lowest eigenpairs of a dense symmetric matrix (row-major).
void sym_eig_lowest(std::vector<double>& matrix, int n, int k,
                    std::vector<double>& evals,
                    std::vector<std::vector<double>>& evecs);

}  // namespace graphnls
