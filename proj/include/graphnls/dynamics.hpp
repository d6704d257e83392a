#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "graphnls/graph_function.hpp"

namespace graphnls {

struct EvolutionConfig {
    double dt;
    double T;
    int record_every = 1;
    double solver_tol = 1e-12;
    bool record_snapshots = false;

    void validate(double sup2mu) const {
        if (dt == 0.0 || T <= 0.0 || record_every < 1 || solver_tol <= 0.0)
            throw std::domain_error("EvolutionConfig: invalid dt/T/record_every");
        if (std::abs(dt) > 0.1 || std::abs(dt) * sup2mu > 0.5)
            throw std::domain_error(
                "EvolutionConfig: dt too large for the nonlinear phase step");
    }
};

struct TrajectoryRecord {
    std::vector<double> times, mass, energy, h1;
    std::vector<double> orbital;  // empty when no reference was given
    std::vector<GraphFunction> snapshots;
    bool blew_up = false;
    double blowup_time = 0.0;
    double boundary_mass_max = 0.0;  // max mass seen in the outer 5% of edges
};

// One Strang-split step of i d/dt Psi = H Psi - |Psi|^{2mu} Psi: exact half
// nonlinear phase rotation, Crank-Nicolson for the symmetric discrete H
// (delta vertex term in the quadratic form), half phase rotation. The linear
// solve uses the banded-plus-vertex-border structure directly (per-edge
// Thomas elimination and a scalar vertex Schur complement), so Crank-Nicolson
// conserves the discrete mass exactly.
class Stepper {
  public:
    Stepper(const StarGraphParams& params, const GridSpec& grid, double dt);

    void step(GraphFunction& f) const;
    double dt() const { return dt_; }

  private:
    void linear_step(GraphFunction& f) const;

    StarGraphParams params_;
    GridSpec grid_;
    double dt_;
    cplx diag_, off_;              // interior row of W + i dt/2 A
    cplx vertex_diag_, coupling_;  // vertex row entries
    std::vector<cplx> pivots_;     // prefactored Thomas pivots
    std::vector<cplx> z_;          // Schur column (same for every edge)
};

GraphFunction step(const GraphFunction& f, double dt,
                   const StarGraphParams& params);

TrajectoryRecord evolve(const GraphFunction& f0, const EvolutionConfig& cfg,
                        const StarGraphParams& params,
                        const GraphFunction* reference = nullptr);

// p = infinity Gagliardo-Nirenberg ratio ||f||_inf / (||f'||^{1/2} ||f||^{1/2}),
// the collapse indicator.
double gn_monitor(const GraphFunction& f);

}  // namespace graphnls
