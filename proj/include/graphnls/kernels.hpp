#pragma once

#include <cmath>
#include <complex>
#include <vector>

// Data-parallel inner loops shared by the norms, functionals and the time
// stepper. Each kernel has a serial reference implementation and an OpenMP
// variant; the serial ones are kept for testing and benchmarking, the public
// aliases at the bottom pick the parallel path.

namespace graphnls::kernels {

using cplx = std::complex<double>;
using Field = std::vector<std::vector<cplx>>;

namespace serial {

// Trapezoid rule of |v|^p summed over all edges.
inline double trapz_abs_pow(const Field& v, double dx, double p) {
    double s = 0.0;
    for (const auto& edge : v) {
        const int M = static_cast<int>(edge.size()) - 1;
        double e = 0.5 * (std::pow(std::abs(edge[0]), p) +
                          std::pow(std::abs(edge[M]), p));
        for (int k = 1; k < M; ++k) e += std::pow(std::abs(edge[k]), p);
        s += e * dx;
    }
    return s;
}

inline double sup_abs(const Field& v) {
    double m = 0.0;
    for (const auto& edge : v)
        for (cplx z : edge) m = std::max(m, std::abs(z));
    return m;
}

// Exact Dirichlet energy of the piecewise-linear interpolant,
// sum over cells of |v_{k+1} - v_k|^2 / dx.
inline double grad_sq(const Field& v, double dx) {
    double s = 0.0;
    for (const auto& edge : v) {
        const int M = static_cast<int>(edge.size()) - 1;
        double e = 0.0;
        for (int k = 0; k < M; ++k) e += std::norm(edge[k + 1] - edge[k]);
        s += e / dx;
    }
    return s;
}

// Discrete H1 inner product <f, g> = (f, g)_L2 + (Df, Dg)_L2, trapezoid mass
// and cell-difference derivative, conjugate-linear in the first argument.
inline cplx h1_dot(const Field& f, const Field& g, double dx) {
    cplx s(0.0, 0.0);
    for (size_t j = 0; j < f.size(); ++j) {
        const auto& a = f[j];
        const auto& b = g[j];
        const int M = static_cast<int>(a.size()) - 1;
        cplx e = 0.5 * (std::conj(a[0]) * b[0] + std::conj(a[M]) * b[M]);
        for (int k = 1; k < M; ++k) e += std::conj(a[k]) * b[k];
        s += e * dx;
        cplx d(0.0, 0.0);
        for (int k = 0; k < M; ++k)
            d += std::conj(a[k + 1] - a[k]) * (b[k + 1] - b[k]);
        s += d / dx;
    }
    return s;
}

// Exact nonlinear substep, v <- exp(i |v|^{2 mu} tau) v. Modulus preserving;
// 0 * log guard at |v| = 0.
inline void phase_rotate(Field& v, double mu, double tau) {
    for (auto& edge : v)
        for (auto& z : edge) {
            const double a2 = std::norm(z);
            if (a2 == 0.0) continue;
            const double phase = tau * std::exp(mu * std::log(a2));
            z *= cplx(std::cos(phase), std::sin(phase));
        }
}

}  // namespace serial

namespace par {

inline double trapz_abs_pow(const Field& v, double dx, double p) {
    const int N = static_cast<int>(v.size());
    const int M = static_cast<int>(v[0].size()) - 1;
    double s = 0.0;
#pragma omp parallel for collapse(2) reduction(+ : s)
    for (int j = 0; j < N; ++j)
        for (int k = 0; k <= M; ++k) {
            const double w = (k == 0 || k == M) ? 0.5 : 1.0;
            s += w * std::pow(std::abs(v[j][k]), p);
        }
    return s * dx;
}

inline double sup_abs(const Field& v) {
    const int N = static_cast<int>(v.size());
    const int M = static_cast<int>(v[0].size()) - 1;
    double m = 0.0;
#pragma omp parallel for collapse(2) reduction(max : m)
    for (int j = 0; j < N; ++j)
        for (int k = 0; k <= M; ++k) m = std::max(m, std::abs(v[j][k]));
    return m;
}

inline double grad_sq(const Field& v, double dx) {
    const int N = static_cast<int>(v.size());
    const int M = static_cast<int>(v[0].size()) - 1;
    double s = 0.0;
#pragma omp parallel for collapse(2) reduction(+ : s)
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < M; ++k) s += std::norm(v[j][k + 1] - v[j][k]);
    return s / dx;
}

inline cplx h1_dot(const Field& f, const Field& g, double dx) {
    const int N = static_cast<int>(f.size());
    const int M = static_cast<int>(f[0].size()) - 1;
    double re = 0.0, im = 0.0;
#pragma omp parallel for collapse(2) reduction(+ : re, im)
    for (int j = 0; j < N; ++j)
        for (int k = 0; k <= M; ++k) {
            const double w = (k == 0 || k == M) ? 0.5 : 1.0;
            cplx t = w * dx * std::conj(f[j][k]) * g[j][k];
            if (k < M)
                t += std::conj(f[j][k + 1] - f[j][k]) * (g[j][k + 1] - g[j][k]) / dx;
            re += t.real();
            im += t.imag();
        }
    return {re, im};
}

inline void phase_rotate(Field& v, double mu, double tau) {
    const int N = static_cast<int>(v.size());
    const int M = static_cast<int>(v[0].size()) - 1;
#pragma omp parallel for collapse(2)
    for (int j = 0; j < N; ++j)
        for (int k = 0; k <= M; ++k) {
            cplx& z = v[j][k];
            const double a2 = std::norm(z);
            if (a2 == 0.0) continue;
            const double phase = tau * std::exp(mu * std::log(a2));
            z *= cplx(std::cos(phase), std::sin(phase));
        }
}

}  // namespace par

// Fork/join overhead swamps the arithmetic on small grids (the time stepper
// calls these thousands of times on ~10^4 points), so the public entry
// points dispatch on size and only go parallel past the cutoff.
constexpr std::size_t parallel_cutoff = 1 << 16;

inline std::size_t point_count(const Field& v) {
    return v.empty() ? 0 : v.size() * v[0].size();
}

inline double trapz_abs_pow(const Field& v, double dx, double p) {
    return point_count(v) < parallel_cutoff ? serial::trapz_abs_pow(v, dx, p)
                                            : par::trapz_abs_pow(v, dx, p);
}

inline double sup_abs(const Field& v) {
    return point_count(v) < parallel_cutoff ? serial::sup_abs(v)
                                            : par::sup_abs(v);
}

inline double grad_sq(const Field& v, double dx) {
    return point_count(v) < parallel_cutoff ? serial::grad_sq(v, dx)
                                            : par::grad_sq(v, dx);
}

inline cplx h1_dot(const Field& f, const Field& g, double dx) {
    return point_count(f) < parallel_cutoff ? serial::h1_dot(f, g, dx)
                                            : par::h1_dot(f, g, dx);
}

inline void phase_rotate(Field& v, double mu, double tau) {
    point_count(v) < parallel_cutoff ? serial::phase_rotate(v, mu, tau)
                                     : par::phase_rotate(v, mu, tau);
}

}  // namespace graphnls::kernels
