#include "graphnls/stability.hpp"

#include <cmath>
#include <lapacke.h>

#include "graphnls/norms.hpp"

namespace graphnls {
namespace {

// Node ordering: 0 = vertex, then edge j interior nodes k = 1..M-1 at
// 1 + j (M-1) + (k-1). Lumped trapezoid weights: N dx/2 at the vertex,
// dx in the interior.
int node_index(int j, int k, int M) { return 1 + j * (M - 1) + (k - 1); }

double pot_coeff(double mu, double amp2) {
    return amp2 == 0.0 ? 0.0 : std::exp(mu * std::log(amp2));
}

// Dense B = W^{-1/2} A W^{-1/2} + diag(omega - c |Psi|^{2mu}), row-major.
std::vector<double> build_matrix(const StationarySpec& spec,
                                 const GridSpec& grid,
                                 const GraphFunction& state, double c) {
    const int N = spec.params.N, M = grid.M;
    const double dx = grid.dx();
    const double mu = spec.params.mu, omega = spec.omega;
    const int n = 1 + N * (M - 1);
    const double w0 = 0.5 * N * dx;

    std::vector<double> B(static_cast<size_t>(n) * n, 0.0);
    auto at = [&](int r, int col) -> double& {
        return B[static_cast<size_t>(r) * n + col];
    };

    at(0, 0) = (N / dx + spec.params.alpha) / w0 +
               omega - c * pot_coeff(mu, std::norm(state.vertex()));
    const double vcouple = (-1.0 / dx) / std::sqrt(w0 * dx);
    for (int j = 0; j < N; ++j) {
        at(0, node_index(j, 1, M)) = vcouple;
        at(node_index(j, 1, M), 0) = vcouple;
        for (int k = 1; k < M; ++k) {
            const int i = node_index(j, k, M);
            at(i, i) = 2.0 / (dx * dx) +
                       omega - c * pot_coeff(mu, std::norm(state.values[j][k]));
            if (k > 1) {
                const int left = node_index(j, k - 1, M);
                at(i, left) = -1.0 / (dx * dx);
                at(left, i) = -1.0 / (dx * dx);
            }
        }
    }
    return B;
}

// ||(W^{-1} A + omega - c |Psi|^{2mu}) psi||_W / ||psi||_W, matrix-free.
double operator_residual(const StationarySpec& spec, const GridSpec& grid,
                         const GraphFunction& state, double c) {
    const int N = spec.params.N, M = grid.M;
    const double dx = grid.dx();
    const double mu = spec.params.mu, omega = spec.omega;
    const double w0 = 0.5 * N * dx;

    double num = 0.0, den = 0.0;
    const double psi0 = state.vertex().real();
    double stiff0 = (N / dx + spec.params.alpha) * psi0;
    for (int j = 0; j < N; ++j) stiff0 -= state.values[j][1].real() / dx;
    const double r0 = stiff0 / w0 +
                      (omega - c * pot_coeff(mu, psi0 * psi0)) * psi0;
    num += w0 * r0 * r0;
    den += w0 * psi0 * psi0;
    for (int j = 0; j < N; ++j) {
        for (int k = 1; k < M; ++k) {
            const double v = state.values[j][k].real();
            const double vl = k == 1 ? psi0 : state.values[j][k - 1].real();
            const double vr = state.values[j][k + 1].real();
            const double r = (2.0 * v - vl - vr) / (dx * dx) +
                             (omega - c * pot_coeff(mu, v * v)) * v;
            num += dx * r * r;
            den += dx * v * v;
        }
    }
    return std::sqrt(num / den);
}

}  // namespace

void sym_eig_lowest(std::vector<double>& matrix, int n, int k,
                    std::vector<double>& evals,
                    std::vector<std::vector<double>>& evecs) {
    k = std::min(k, n);
    std::vector<double> w(n), z(static_cast<size_t>(n) * k);
    std::vector<lapack_int> isuppz(2 * std::max(1, k));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dsyevr(
        LAPACK_ROW_MAJOR, 'V', 'I', 'L', n, matrix.data(), n, 0.0, 0.0, 1, k,
        0.0, &m, w.data(), z.data(), k, isuppz.data());
    if (info != 0)
        throw std::runtime_error("sym_eig_lowest: dsyevr failed, info = " +
                                 std::to_string(info));
    evals.assign(w.begin(), w.begin() + m);
    evecs.assign(m, std::vector<double>(n));
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < n; ++r) evecs[c][r] = z[static_cast<size_t>(r) * k + c];
}

LinearizationPair assemble(const StationarySpec& spec, const GridSpec& grid,
                           int k) {
    if (spec.j != 0)
        throw std::domain_error("assemble: linearization is around the j = 0 ground state");
    const GraphFunction state = build_state(spec, grid);
    const double mu = spec.params.mu;

    LinearizationPair pair{1 + spec.params.N * (grid.M - 1), grid, spec};
    pair.l_plus = build_matrix(spec, grid, state, 1.0);
    pair.l_minus = build_matrix(spec, grid, state, 2.0 * mu + 1.0);
    pair.kernel_residual_plus = operator_residual(spec, grid, state, 1.0);

    // k lowest eigenpairs; raise k until the top of the computed window is
    // clear of the negative axis so no negative eigenvalue can be missed.
    for (int kk = k; kk <= pair.n; kk *= 2) {
        std::vector<double> mp = pair.l_plus, mm = pair.l_minus;
        sym_eig_lowest(mp, pair.n, kk, pair.low_spectrum_plus, pair.evecs_plus);
        sym_eig_lowest(mm, pair.n, kk, pair.low_spectrum_minus, pair.evecs_minus);
        if (pair.low_spectrum_plus.back() > -1e-6 &&
            pair.low_spectrum_minus.back() > -1e-6)
            break;
    }
    return pair;
}

double kernel_residual(const StationarySpec& spec, const GridSpec& grid) {
    const GraphFunction state = build_state(spec, grid);
    return operator_residual(spec, grid, state, 1.0);
}

VkCheck vk_check(const StarGraphParams& params, double omega, double d_omega) {
    if (d_omega <= 0.0) throw std::domain_error("vk_check: d_omega must be > 0");
    const double analytic = vk_slope(omega, params);
    const double hi = state_l2_squared(StationarySpec(params, 0, omega + d_omega));
    const double lo = state_l2_squared(StationarySpec(params, 0, omega - d_omega));
    return {analytic, (hi - lo) / (2.0 * d_omega)};
}

MorseReport morse_report(const LinearizationPair& pair) {
    MorseReport rep;
    // eigenvalues within -1e-3 of zero are treated as the discretized
    // kernel/continuum edge, not as genuine negatives
    const double neg_tol = -1e-3;
    for (double e : pair.low_spectrum_plus) rep.neg_plus += e < neg_tol;
    for (double e : pair.low_spectrum_minus) rep.neg_minus += e < neg_tol;
    rep.kernel_residual_plus = pair.kernel_residual_plus;
    if (pair.low_spectrum_minus.size() > 1)
        rep.second_minus = pair.low_spectrum_minus[1];
    rep.conclusive = !pair.low_spectrum_plus.empty() &&
                     pair.low_spectrum_plus.back() > -1e-6 &&
                     pair.low_spectrum_minus.back() > -1e-6;
    return rep;
}

}  // namespace graphnls
