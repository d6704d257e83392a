#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "graphnls/rearrangement.hpp"
#include "graphnls/rng.hpp"

using namespace graphnls;

namespace {

PLGraphFunction tent(int N) {
    PLGraphFunction f(N);
    f.edges[0] = PLEdge{{0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}};
    for (int j = 1; j < N; ++j) f.edges[j] = PLEdge{{0.0}, {0.0}};
    return f;
}

// Continuous-at-the-vertex random PL function with sign changes and
// occasional plateaus; compact support by construction.
PLGraphFunction random_pl(CounterRng& rng) {
    const int N = rng.uniform_int(2, 5);
    PLGraphFunction f(N);
    const double v0 = rng.uniform(-2.0, 2.0);
    for (int j = 0; j < N; ++j) {
        const int nb = rng.uniform_int(2, 9);
        std::vector<double> x{0.0}, y{v0};
        for (int k = 1; k < nb; ++k) {
            x.push_back(x.back() + rng.uniform(0.05, 1.5));
            const double r = rng.next();
            y.push_back(r < 0.15 ? y.back()  // plateau
                                 : rng.uniform(-2.0, 2.0));
        }
        x.push_back(x.back() + rng.uniform(0.05, 1.5));
        y.push_back(0.0);
        f.edges[j] = PLEdge{x, y};
    }
    return f;
}

std::vector<double> breakpoint_levels(const PLGraphFunction& f) {
    std::vector<double> s;
    for (const auto& e : f.edges)
        for (double v : e.y) s.push_back(std::abs(v));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

TEST_CASE("validation rejects malformed PL data") {
    PLGraphFunction f(2);
    f.edges[0] = PLEdge{{0.0, 1.0}, {1.0, 0.0}};
    f.edges[1] = PLEdge{{0.0}, {1.0}};
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);  // no compact support
    f.edges[1] = PLEdge{{0.5, 1.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);  // not starting at 0
    f.edges[1] = PLEdge{{0.0, 1.0, 1.0}, {1.0, 0.5, 0.0}};
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);  // duplicate abscissa
    f.edges[1] = PLEdge{{0.0, 1.0}, {1.0, 0.0}};
    CHECK_NOTHROW(f.validate());
}

TEST_CASE("level measures of the tent are exact") {
    const PLGraphFunction f = tent(3);
    CHECK_THROWS_AS(level_measure(f, -0.1), std::domain_error);
    for (double s : {0.1, 0.25, 0.5, 0.9}) {
        const LevelMeasure m = level_measure(f, s);
        CHECK(m.lambda == doctest::Approx(2.0 * (1.0 - s)).epsilon(1e-15));
        CHECK(m.mu_strict == doctest::Approx(2.0 * (1.0 - s)).epsilon(1e-15));
    }
    CHECK(level_measure(f, 1.0).lambda == 0.0);
    CHECK(level_measure(f, 0.0).mu_strict == doctest::Approx(2.0));
}

TEST_CASE("tent fixture: the polya-szego constant is attained") {
    for (int N : {2, 3, 5}) {
        const PLGraphFunction f = tent(N);
        const PLGraphFunction g = rearrange(f);
        CHECK(pl_kinetic(f) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(pl_kinetic(g) == doctest::Approx(0.25 * N * N * 2.0).epsilon(1e-12));
        for (double p : {1.0, 2.0, 4.0})
            CHECK(pl_lp_norm(g, p) ==
                  doctest::Approx(pl_lp_norm(f, p)).epsilon(1e-13));
        // rearranged: N identical decreasing edges with g(0) = max |f|
        for (int j = 0; j < N; ++j) {
            CHECK(g.edges[j].y.front() == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(std::is_sorted(g.edges[j].y.rbegin(), g.edges[j].y.rend()));
        }
    }
    CHECK(pl_lp_norm(tent(3), 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rearrangement corpus: equimeasurable, norm preserving, bounded") {
    CounterRng rng(20240817);
    for (int trial = 0; trial < 500; ++trial) {
        const PLGraphFunction f = random_pl(rng);
        const PLGraphFunction g = rearrange(f);
        g.validate();

        // symmetric: all edges identical and decreasing
        for (int j = 1; j < g.N; ++j) {
            REQUIRE(g.edges[j].x == g.edges[0].x);
            REQUIRE(g.edges[j].y == g.edges[0].y);
        }
        CHECK(std::is_sorted(g.edges[0].y.rbegin(), g.edges[0].y.rend()));

        // equimeasurability at every breakpoint level of input and output
        auto levels = breakpoint_levels(f);
        for (double v : breakpoint_levels(g)) levels.push_back(v);
        for (double s : levels) {
            const LevelMeasure a = level_measure(f, s);
            const LevelMeasure b = level_measure(g, s);
            CHECK(a.lambda == doctest::Approx(b.lambda).epsilon(1e-12).scale(1.0));
            CHECK(a.mu_strict ==
                  doctest::Approx(b.mu_strict).epsilon(1e-12).scale(1.0));
        }

        for (double p : {1.0, 2.0, 4.0}) {
            const double np = pl_lp_norm(f, p);
            CHECK(std::abs(pl_lp_norm(g, p) - np) <= 1e-12 * std::max(1.0, np));
        }

        CHECK(pl_kinetic(g) <=
              0.25 * f.N * f.N * pl_kinetic(f) * (1.0 + 1e-12));
    }
}

TEST_CASE("grid roundtrip") {
    GridSpec grid(5.0, 500);
    StarGraphParams p(3, -1.0, 1.0);
    GraphFunction f = GraphFunction::from_profiles(p, grid, [](int, double x) {
        return cplx(std::max(0.0, 1.0 - 0.5 * x), 0.0);
    });
    for (auto& e : f.values) e.back() = 0.0;
    const PLGraphFunction pl = pl_from_graph_function(f);
    const GraphFunction back = pl_to_graph_function(pl, p, grid);
    double m = 0.0;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k <= grid.M; ++k)
            m = std::max(m, std::abs(back.values[j][k] - f.values[j][k]));
    CHECK(m < 1e-12);
}
