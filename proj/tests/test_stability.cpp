#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "graphnls/norms.hpp"
#include "graphnls/stability.hpp"

using namespace graphnls;

namespace {

// (B v, v) for the dense row-major matrix
double quad_form(const std::vector<double>& B, const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    double s = 0.0;
    for (int r = 0; r < n; ++r) {
        double row = 0.0;
        for (int c = 0; c < n; ++c) row += B[static_cast<size_t>(r) * n + c] * v[c];
        s += row * v[r];
    }
    return s;
}

std::vector<double> weighted_state(const StationarySpec& s, const GridSpec& g) {
    const GraphFunction f = build_state(s, g);
    const double dx = g.dx();
    std::vector<double> v;
    v.push_back(std::sqrt(0.5 * s.params.N * dx) * f.vertex().real());
    for (int j = 0; j < s.params.N; ++j)
        for (int k = 1; k < g.M; ++k)
            v.push_back(std::sqrt(dx) * f.values[j][k].real());
    return v;
}

}  // namespace

TEST_CASE("assembled operators are exactly symmetric") {
    StationarySpec s(StarGraphParams(3, -1.0, 1.0), 0, 1.0);
    const LinearizationPair pair = assemble(s, GridSpec(10.0, 250), 4);
    for (const auto* B : {&pair.l_plus, &pair.l_minus}) {
        double m = 0.0;
        for (int r = 0; r < pair.n; ++r)
            for (int c = 0; c < r; ++c)
                m = std::max(m, std::abs((*B)[static_cast<size_t>(r) * pair.n + c] -
                                         (*B)[static_cast<size_t>(c) * pair.n + r]));
        CHECK(m == 0.0);
    }
    CHECK_THROWS_AS(assemble(StationarySpec(StarGraphParams(3, -1.0, 1.0), 1, 2.0),
                             GridSpec(10.0, 250), 4),
                    std::domain_error);
}

TEST_CASE("morse data of the ground state") {
    StationarySpec s(StarGraphParams(3, -1.0, 1.0), 0, 1.0);
    const LinearizationPair pair = assemble(s, GridSpec(10.0, 500), 6);
    const MorseReport rep = morse_report(pair);
    CHECK(rep.conclusive);
    CHECK(rep.neg_plus == 0);
    CHECK(rep.neg_minus == 1);
    CHECK(rep.second_minus > -1e-3);
    CHECK(std::abs(pair.low_spectrum_plus[0]) < 1e-3);
    // On the short L = 10 eigen-grid the residual is dominated by the
    // Dirichlet truncation row (~ psi(L)/dx^{3/2}), so measure it on a
    // domain long enough for the tail to be negligible.
    CHECK(rep.kernel_residual_plus < 5e-2);
    CHECK(kernel_residual(s, GridSpec(20.0, 1000)) < 5e-3);

    // eigenvector of the near-zero l_plus mode is the state itself
    const std::vector<double> v = weighted_state(s, pair.grid);
    double dot = 0.0, nv = 0.0, ne = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        dot += v[i] * pair.evecs_plus[0][i];
        nv += v[i] * v[i];
        ne += pair.evecs_plus[0][i] * pair.evecs_plus[0][i];
    }
    CHECK(std::abs(dot) / std::sqrt(nv * ne) > 1.0 - 1e-6);
}

TEST_CASE("morse data holds just above the admissibility bound") {
    StarGraphParams p(3, -1.0, 1.0);
    const double omega = 1.05 / 9.0;  // 1.05 * alpha^2 / N^2
    StationarySpec s(p, 0, omega);
    // slow decay sqrt(omega) ~ 0.34 needs a longer box
    const MorseReport rep = morse_report(assemble(s, GridSpec(40.0, 1000), 6));
    CHECK(rep.neg_plus == 0);
    CHECK(rep.neg_minus == 1);
}

TEST_CASE("alpha = 0, N = 2 reduces to the line soliton linearization") {
    StationarySpec s(StarGraphParams(2, 0.0, 1.0), 0, 1.0);
    const LinearizationPair pair = assemble(s, GridSpec(12.0, 600), 6);
    CHECK(std::abs(pair.low_spectrum_plus[0]) < 1e-3);
    const MorseReport rep = morse_report(pair);
    CHECK(rep.neg_plus == 0);
    CHECK(rep.neg_minus == 1);
}

TEST_CASE("quadratic-form identity for the (2mu+1)-potential operator") {
    // (L_minus Psi, Psi)_W = -2 mu ||Psi||_{2mu+2}^{2mu+2} + O(dx^2);
    // the mu = 1 case carries the -2 prefactor used in the Morse count.
    for (double mu : {0.5, 1.0, 2.0}) {
        StarGraphParams p(3, -1.0, mu);
        StationarySpec s(p, 0, 1.0);
        GridSpec g(12.0, 600);
        const LinearizationPair pair = assemble(s, g, 2);
        const std::vector<double> v = weighted_state(s, g);
        const double lhs = quad_form(pair.l_minus, v);
        const double rhs =
            -2.0 * mu * lp_pow(build_state(s, g), 2.0 * mu + 2.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(5e-3));
    }
}

TEST_CASE("vk check across the stability regimes") {
    StarGraphParams p3(3, -1.0, 2.0);
    const VkCheck sub = vk_check(p3, 1.0, 1e-4);
    CHECK(sub.analytic > 0.0);
    CHECK(sub.numeric > 0.0);
    CHECK(sub.analytic == doctest::Approx(sub.numeric).epsilon(1e-5));
    CHECK_THROWS_AS(vk_check(p3, 1.0, -1.0), std::domain_error);

    // mu = 3: slope changes sign at some omega*; both routes agree in sign
    StarGraphParams pc(3, -1.0, 3.0);
    const double lo = 1.0 / 9.0 + 1e-3;
    const double hi = 20.0;
    const double slo = vk_slope(lo, pc), shi = vk_slope(hi, pc);
    REQUIRE((slo < 0.0) != (shi < 0.0));
    const double ws = oracles::bisect(
        [&](double w) { return vk_slope(w, pc); }, lo, hi, 1e-9);
    for (double w : {0.5 * ws, 2.0 * ws}) {
        const VkCheck c = vk_check(pc, w, 1e-5 * w);
        CHECK((c.analytic < 0.0) == (c.numeric < 0.0));
    }
}
