#include "graphnls/stationary.hpp"

#include <cmath>
#include <string>

#include "graphnls/norms.hpp"
#include "graphnls/quadrature.hpp"

namespace graphnls {
namespace {

double sech(double z) {
    const double e = std::exp(-std::abs(z));
    return 2.0 * e / (1.0 + e * e);
}

// Smooth step: 0 on (-inf, 0], 1 on [1, inf), C^inf in between
// (the standard exp(-1/t) partition function).
double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// int_0^inf |phi_s(x + xi)|^2 dx       (power = 1/mu - 1)
// int_0^inf |phi_s(x + xi)|^{2mu+2} dx (power = 1/mu), via the tanh change of
// variables; T = tanh(xi mu sqrt(omega)).
double tail_l2(double T, double omega, double mu) {
    return std::pow(mu + 1.0, 1.0 / mu) / mu * std::pow(omega, 1.0 / mu - 0.5) *
           quad::profile_integral(T, 1.0 / mu - 1.0);
}

double tail_nl(double T, double omega, double mu) {
    return std::pow(mu + 1.0, 1.0 + 1.0 / mu) / mu *
           std::pow(omega, 1.0 / mu + 0.5) *
           quad::profile_integral(T, 1.0 / mu);
}

}  // namespace

double soliton_profile(double x, double omega, double mu) {
    if (omega <= 0.0 || mu <= 0.0)
        throw std::domain_error("soliton_profile: omega and mu must be positive");
    return std::pow((mu + 1.0) * omega, 0.5 / mu) *
           std::pow(sech(mu * std::sqrt(omega) * x), 1.0 / mu);
}

StationarySpec::StationarySpec(const StarGraphParams& p, int j_, double omega_)
    : params(p), j(j_), omega(omega_), a_j(0.0), epsilon(p.N, -1) {
    if (omega <= 0.0) throw std::domain_error("StationarySpec: omega must be > 0");
    if (j < 0 || j > params.N)
        throw std::domain_error("StationarySpec: j out of range");
    for (int i = 0; i < j; ++i) epsilon[i] = +1;
    const int s = 2 * j - params.N;  // sum of signs

    if (params.alpha == 0.0) {
        // Kirchhoff: tanh term must vanish, a = 0 (any sign pattern collapses
        // to the symmetric state).
        a_j = 0.0;
        return;
    }
    if (s * params.alpha <= 0.0)
        throw std::domain_error(
            "StationarySpec: sum of signs must match the sign of alpha "
            "(alpha < 0 needs more tails than bumps)");
    const double bound = params.alpha * params.alpha / (double(s) * s);
    if (omega <= bound)
        throw std::domain_error("StationarySpec: inadmissible, requires omega > alpha^2/(N-2j)^2 = " +
                                std::to_string(bound));
    const double arg = params.alpha / (s * std::sqrt(omega));  // in (0, 1)
    const double c = params.mu * std::sqrt(omega);
    if (arg < 1.0 - 1e-12) {
        a_j = std::atanh(arg) / c;
    } else {
        // Near the admissibility boundary arctanh overflows; fall back to
        // bisection on tanh(c a) = arg.
        double lo = 0.0, hi = 1.0;
        while (std::tanh(c * hi) < arg) hi *= 2.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (std::tanh(c * mid) < arg ? lo : hi) = mid;
        }
        a_j = 0.5 * (lo + hi);
    }
}

GraphFunction build_state(const StationarySpec& spec, const GridSpec& grid) {
    const double omega = spec.omega, mu = spec.params.mu, a = spec.a_j;
    return GraphFunction::from_profiles(
        spec.params, grid, [&](int edge, double x) {
            const double shift = spec.epsilon[edge] > 0 ? -a : a;
            return cplx(soliton_profile(x + shift, omega, mu), 0.0);
        });
}

double state_action(const StationarySpec& spec) {
    const double mu = spec.params.mu, omega = spec.omega;
    const double T = std::tanh(mu * std::sqrt(omega) * spec.a_j);
    const int N = spec.params.N, j = spec.j;
    const double pp = j * tail_nl(-T, omega, mu) + (N - j) * tail_nl(T, omega, mu);
    return mu / (2.0 * mu + 2.0) * pp;  // S_omega = S~ on the Nehari manifold
}

double state_l2_squared(const StationarySpec& spec) {
    const double mu = spec.params.mu, omega = spec.omega;
    const double T = std::tanh(mu * std::sqrt(omega) * spec.a_j);
    const int N = spec.params.N, j = spec.j;
    return j * tail_l2(-T, omega, mu) + (N - j) * tail_l2(T, omega, mu);
}

double state_nehari_residual(const StationarySpec& spec) {
    const double mu = spec.params.mu, omega = spec.omega;
    const double T = std::tanh(mu * std::sqrt(omega) * spec.a_j);
    const int N = spec.params.N, j = spec.j;

    // int_xi^inf phi'^2 = omega * [l2 integrand - nl-exponent integrand],
    // from phi'^2 = omega phi^2 tanh^2.
    auto tail_grad = [&](double Tlo) {
        return omega * std::pow(mu + 1.0, 1.0 / mu) / mu *
               std::pow(omega, 1.0 / mu - 0.5) *
               (quad::profile_integral(Tlo, 1.0 / mu - 1.0) -
                quad::profile_integral(Tlo, 1.0 / mu));
    };
    const double grad2 = j * tail_grad(-T) + (N - j) * tail_grad(T);
    const double l2 = state_l2_squared(spec);
    const double pp = state_action(spec) * (2.0 * mu + 2.0) / mu;
    const double v = soliton_profile(spec.a_j, omega, mu);
    const double num = grad2 + spec.params.alpha * v * v + omega * l2 - pp;
    return std::abs(num) / (grad2 + omega * l2 + pp);
}

GraphFunction kirchhoff_state(int N, double omega, double mu, double a,
                              const GridSpec& grid) {
    if (a < 0.0) throw std::domain_error("kirchhoff_state: a must be >= 0");
    if (N % 2 == 1 && a != 0.0)
        throw std::domain_error(
            "kirchhoff_state: N odd admits only the unique a = 0 critical point");
    StarGraphParams p(N, 0.0, mu);
    return GraphFunction::from_profiles(p, grid, [&](int edge, double x) {
        const double shift = (N % 2 == 0 && edge < N / 2) ? -a : a;
        return cplx(soliton_profile(x + shift, omega, mu), 0.0);
    });
}

double vk_slope(double omega, const StarGraphParams& params) {
    const double mu = params.mu;
    const double aa = std::abs(params.alpha);
    const int N = params.N;
    if (omega * N * N <= aa * aa)
        throw std::domain_error("vk_slope: requires omega > alpha^2/N^2");
    const double T = aa / (N * std::sqrt(omega));
    const double C = N * std::pow(mu + 1.0, 1.0 / mu) / mu *
                     std::pow(omega, 1.0 / mu - 1.5);
    double bracket = (1.0 / mu - 0.5) * quad::profile_integral(T, 1.0 / mu - 1.0);
    if (aa > 0.0)
        bracket += 0.5 * T * std::pow(1.0 - T * T, 1.0 / mu - 1.0);
    return C * bracket;
}

double residual(const GraphFunction& f, double omega,
                const StarGraphParams& params) {
    f.require_energy_space();
    const double dx = f.grid.dx();
    const double mu = params.mu;
    double s = 0.0;
    for (int j = 0; j < params.N; ++j) {
        const auto& v = f.values[j];
        for (int k = 1; k < f.grid.M; ++k) {
            const cplx lap = (v[k + 1] - 2.0 * v[k] + v[k - 1]) / (dx * dx);
            const double a2 = std::norm(v[k]);
            const double nl = a2 == 0.0 ? 0.0 : std::exp(mu * std::log(a2));
            s += std::norm(-lap - nl * v[k] + omega * v[k]) * dx;
        }
    }
    // one-sided O(dx^2) stencil for the flux defect at the vertex
    cplx flux(0.0, 0.0);
    for (int j = 0; j < params.N; ++j) {
        const auto& v = f.values[j];
        flux += (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dx);
    }
    return std::sqrt(s) + std::abs(flux - params.alpha * f.vertex());
}

EscapeResult escape_demo(int n, double omega, double mu, int N,
                         const GridSpec& grid) {
    if (n <= 0) throw std::domain_error("escape_demo: n must be positive");
    if (grid.L <= n + 10.0 / std::sqrt(omega))
        throw std::domain_error(
            "escape_demo: grid too short, need L > n + 10/sqrt(omega)");
    StarGraphParams p(N, 0.0, mu);
    GraphFunction trial = GraphFunction::from_profiles(
        p, grid, [&](int edge, double x) {
            if (edge != 0) return cplx(0.0, 0.0);
            // chi vanishes on [0,1] and equals 1 on [2, inf)
            const double chi = smooth_step(x - 1.0);
            return cplx(chi * soliton_profile(x - n, omega, mu), 0.0);
        });
    const double g2 = grad_sq_norm(trial);
    const double l2 = lp_pow(trial, 2.0);
    const double pp = lp_pow(trial, 2.0 * mu + 2.0);
    const double delta = std::pow((g2 + omega * l2) / pp, 1.0 / (2.0 * mu));
    const double reduced =
        std::pow(delta, 2.0 * mu + 2.0) * mu / (2.0 * mu + 2.0) * pp;
    return {reduced, delta};
}

}  // namespace graphnls
