#include "graphnls/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace graphnls::quad {
namespace {

constexpr int kNodes = 15;

struct GaussRule {
    std::array<double, kNodes> x{}, w{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n; weights
// 2 / ((1 - x^2) P_n'(x)^2).
GaussRule make_rule() {
    GaussRule r;
    const int n = kNodes;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& r = rule();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kNodes; ++i) s += r.w[i] * f(c + h * r.x[i]);
    return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double left = panel(f, a, c);
    const double right = panel(f, c, b);
    const double err = std::abs(left + right - whole);
    if (err < tol || depth > 52) return left + right;
    return adapt(f, a, c, left, 0.5 * tol, depth + 1) +
           adapt(f, c, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (a == b) return 0.0;
    return adapt(f, a, b, panel(f, a, b), tol, 0);
}

double profile_integral(double lo, double expo, double tol) {
    if (lo <= -1.0 || lo > 1.0)
        throw std::domain_error("profile_integral: lower limit outside (-1, 1]");
    if (expo <= -1.0)
        throw std::domain_error("profile_integral: exponent must exceed -1");
    // Substitute 1 - t = s^m with m*(expo+1) = 4: the (1-t)^expo endpoint
    // factor becomes s^3, so the integrand is smooth at the upper limit and
    // the adaptive rule converges at full order even for expo < 0.
    const double m = 4.0 / (expo + 1.0);
    const double upper = std::pow(1.0 - lo, 1.0 / m);
    auto f = [expo, m](double s) {
        const double v = 2.0 - std::pow(s, m);
        if (s <= 0.0 || v <= 0.0) return 0.0;
        return m * std::pow(s, m * (expo + 1.0) - 1.0) * std::pow(v, expo);
    };
    return integrate(f, 0.0, upper, tol);
}

}  // namespace graphnls::quad
