#include "graphnls/functionals.hpp"

#include <cmath>

#include "graphnls/norms.hpp"
#include "graphnls/quadrature.hpp"

namespace graphnls {

FunctionalReport evaluate(const GraphFunction& f, double omega) {
    f.require_energy_space();
    const double mu = f.params.mu;
    const double alpha = f.params.alpha;
    const double g2 = grad_sq_norm(f);
    const double l2 = lp_pow(f, 2.0);
    const double pp = lp_pow(f, 2.0 * mu + 2.0);
    const double v2 = std::norm(f.vertex());

    FunctionalReport r{};
    r.omega = omega;
    r.mass = 0.5 * l2;
    r.kirchhoff_energy = 0.5 * g2 - pp / (2.0 * mu + 2.0);
    r.energy = r.kirchhoff_energy + 0.5 * alpha * v2;
    r.action = r.energy + omega * r.mass;
    r.kirchhoff_nehari = g2 - pp + omega * l2;
    r.nehari = r.kirchhoff_nehari + alpha * v2;
    r.reduced_action = r.action - 0.5 * r.nehari;
    return r;
}

std::pair<GraphFunction, double> nehari_project(const GraphFunction& f,
                                                double omega) {
    f.require_energy_space();
    const double mu = f.params.mu;
    const double g2 = grad_sq_norm(f);
    const double l2 = lp_pow(f, 2.0);
    if (l2 == 0.0) throw std::domain_error("nehari_project: zero function");
    const double pp = lp_pow(f, 2.0 * mu + 2.0);
    const double num = g2 + f.params.alpha * std::norm(f.vertex()) + omega * l2;
    if (num <= 0.0)
        throw std::domain_error(
            "nehari_project: nonpositive quadratic numerator (omega <= alpha^2/N^2?)");
    const double beta = std::pow(num / pp, 1.0 / (2.0 * mu));
    GraphFunction scaled = f;
    scaled *= cplx(beta, 0.0);
    return {std::move(scaled), beta};
}

double d0(double omega, double mu) {
    if (omega <= 0.0 || mu <= 0.0)
        throw std::domain_error("d0: omega and mu must be positive");
    return std::pow(mu + 1.0, 1.0 / mu) * std::pow(omega, 1.0 / mu + 0.5) *
           quad::profile_integral(0.0, 1.0 / mu, 1e-12);
}

double d_line(double omega, double mu) { return d0(omega, mu); }

double alpha_star(double omega, double mu, int N) {
    if (omega <= 0.0 || mu <= 0.0 || N < 2)
        throw std::domain_error("alpha_star: need omega, mu > 0 and N >= 2");
    if (N == 2) return 0.0;  // degenerate: equality already holds at |a*| = 0
    const double full = quad::profile_integral(0.0, 1.0 / mu, 1e-13);
    // (N/2) int_u^1 is strictly decreasing in u, from (N/2) full > full to 0.
    auto excess = [&](double u) {
        return 0.5 * N * quad::profile_integral(u, 1.0 / mu, 1e-13) - full;
    };
    double lo = 0.0, hi = 1.0;
    const double scale = N * std::sqrt(omega);
    while ((hi - lo) * scale > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return -0.5 * (lo + hi) * scale;
}

}  // namespace graphnls
