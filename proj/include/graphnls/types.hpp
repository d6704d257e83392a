#pragma once

#include <stdexcept>
#include <string>

namespace graphnls {

// N half-lines joined at a single vertex with a delta coupling of strength
// alpha (alpha < 0 attractive, alpha = 0 Kirchhoff), focusing nonlinearity
// |psi|^{2 mu} psi.
struct StarGraphParams {
    int N;
    double alpha;
    double mu;

    StarGraphParams(int N_, double alpha_, double mu_)
        : N(N_), alpha(alpha_), mu(mu_) {
        if (N < 2) throw std::domain_error("StarGraphParams: N must be >= 2");
        if (mu <= 0.0) throw std::domain_error("StarGraphParams: mu must be > 0");
    }
};

// Uniform grid on the truncated edge [0, L], M cells, homogeneous Dirichlet
// at x = L. All states of interest decay like exp(-sqrt(omega) x), so
// L >= 12/sqrt(omega) keeps the truncation error below quadrature error.
struct GridSpec {
    double L;
    int M;

    GridSpec(double L_, int M_) : L(L_), M(M_) {
        if (L <= 0.0 || M < 8)
            throw std::domain_error("GridSpec: need L > 0 and M >= 8");
    }

    double dx() const { return L / M; }

    bool operator==(const GridSpec& o) const { return L == o.L && M == o.M; }
};

// Default desk-scale grids: functionals resolve quadrature at dx = 0.01,
// eigen-solves stay dense-feasible at dx = 0.02.
inline GridSpec default_grid() { return GridSpec(30.0, 3000); }
inline GridSpec eigen_grid() { return GridSpec(20.0, 1000); }

}  // namespace graphnls
