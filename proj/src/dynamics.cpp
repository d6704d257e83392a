#include "graphnls/dynamics.hpp"

#include <cmath>

#include "graphnls/functionals.hpp"
#include "graphnls/kernels.hpp"
#include "graphnls/norms.hpp"

namespace graphnls {
namespace {

// Solve the constant-coefficient tridiagonal system in place given the
// prefactored pivots d (Thomas, no pivoting: the matrix is strictly
// diagonally dominant).
void tridiag_solve(const std::vector<cplx>& pivots, cplx off,
                   std::vector<cplx>& rhs) {
    const size_t m = pivots.size();
    for (size_t i = 1; i < m; ++i) rhs[i] -= off / pivots[i - 1] * rhs[i - 1];
    rhs[m - 1] /= pivots[m - 1];
    for (size_t i = m - 1; i-- > 0;)
        rhs[i] = (rhs[i] - off * rhs[i + 1]) / pivots[i];
}

std::vector<cplx> make_pivots(cplx diag, cplx off, int m) {
    std::vector<cplx> d(m);
    d[0] = diag;
    for (int i = 1; i < m; ++i) d[i] = diag - off * off / d[i - 1];
    return d;
}

}  // namespace

Stepper::Stepper(const StarGraphParams& params, const GridSpec& grid, double dt)
    : params_(params), grid_(grid), dt_(dt) {
    const double dx = grid.dx();
    const cplx itheta(0.0, 0.5 * dt);
    diag_ = dx + itheta * 2.0 / dx;
    off_ = -itheta / dx;
    vertex_diag_ = 0.5 * params.N * dx + itheta * (params.N / dx + params.alpha);
    coupling_ = -itheta / dx;

    const int m = grid.M - 1;
    pivots_ = make_pivots(diag_, off_, m);
    z_.assign(m, cplx(0.0, 0.0));
    z_[0] = cplx(1.0, 0.0);
    tridiag_solve(pivots_, off_, z_);
}

void Stepper::linear_step(GraphFunction& f) const {
    const int N = params_.N, M = grid_.M;
    const double dx = grid_.dx();
    const cplx itheta(0.0, 0.5 * dt_);
    const cplx psi0 = f.values[0][0];

    // rhs of (W + i dt/2 A) u = (W - i dt/2 A) psi
    cplx sum_first(0.0, 0.0);
    for (int j = 0; j < N; ++j) sum_first += f.values[j][1];
    cplx bv = 0.5 * N * dx * psi0 -
              itheta * ((N / dx + params_.alpha) * psi0 - sum_first / dx);

    std::vector<std::vector<cplx>> y(N, std::vector<cplx>(M - 1));
    for (int j = 0; j < N; ++j) {
        const auto& v = f.values[j];
        for (int k = 1; k < M; ++k) {
            const cplx left = k == 1 ? psi0 : v[k - 1];
            const cplx right = k == M - 1 ? cplx(0.0, 0.0) : v[k + 1];
            y[j][k - 1] = dx * v[k] - itheta * (2.0 * v[k] - left - right) / dx;
        }
        tridiag_solve(pivots_, off_, y[j]);
    }

    // scalar Schur complement at the vertex
    cplx sum_y1(0.0, 0.0);
    for (int j = 0; j < N; ++j) sum_y1 += y[j][0];
    const cplx u0 = (bv - coupling_ * sum_y1) /
                    (vertex_diag_ - double(N) * coupling_ * coupling_ * z_[0]);

    for (int j = 0; j < N; ++j) {
        auto& v = f.values[j];
        v[0] = u0;
        for (int k = 1; k < M; ++k)
            v[k] = y[j][k - 1] - coupling_ * u0 * z_[k - 1];
        v[M] = cplx(0.0, 0.0);
    }
}

void Stepper::step(GraphFunction& f) const {
    kernels::phase_rotate(f.values, params_.mu, 0.5 * dt_);
    linear_step(f);
    kernels::phase_rotate(f.values, params_.mu, 0.5 * dt_);
}

GraphFunction step(const GraphFunction& f, double dt,
                   const StarGraphParams& params) {
    f.require_energy_space();
    GraphFunction out = f;
    Stepper(params, f.grid, dt).step(out);
    return out;
}

TrajectoryRecord evolve(const GraphFunction& f0, const EvolutionConfig& cfg,
                        const StarGraphParams& params,
                        const GraphFunction* reference) {
    f0.require_energy_space();
    const double sup = kernels::sup_abs(f0.values);
    cfg.validate(std::pow(sup, 2.0 * params.mu));

    Stepper stepper(params, f0.grid, cfg.dt);
    GraphFunction f = f0;
    TrajectoryRecord rec;

    const long nsteps = std::llround(cfg.T / std::abs(cfg.dt));
    const int M = f0.grid.M;
    const int boundary_start = M - std::max(1, M / 20);
    const double dx = f0.grid.dx();

    auto record = [&](double t) {
        const FunctionalReport r = evaluate(f, 0.0);
        rec.times.push_back(t);
        rec.mass.push_back(r.mass);
        rec.energy.push_back(r.energy);
        rec.h1.push_back(h1_norm(f));
        if (reference) rec.orbital.push_back(orbital_distance(f, *reference));
        if (cfg.record_snapshots) rec.snapshots.push_back(f);
        double bm = 0.0;
        for (int j = 0; j < params.N; ++j)
            for (int k = boundary_start; k <= M; ++k)
                bm += std::norm(f.values[j][k]) * dx;
        rec.boundary_mass_max = std::max(rec.boundary_mass_max, bm);
    };

    record(0.0);
    for (long s = 1; s <= nsteps; ++s) {
        stepper.step(f);
        const double supn = kernels::sup_abs(f.values);
        if (!std::isfinite(supn) || supn > 1e6) {
            rec.blew_up = true;
            rec.blowup_time = s * cfg.dt;
            break;
        }
        if (s % cfg.record_every == 0 || s == nsteps) record(s * cfg.dt);
    }
    return rec;
}

double gn_monitor(const GraphFunction& f) {
    const double sup = lp_norm(f, inf_p);
    if (sup == 0.0) throw std::domain_error("gn_monitor: zero function");
    const double grad = std::sqrt(grad_sq_norm(f));
    const double l2 = lp_norm(f, 2.0);
    return sup / (std::sqrt(grad) * std::sqrt(l2));
}

}  // namespace graphnls
