#include "graphnls/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphnls {
namespace {

struct Segment {
    double v0, v1, len;  // nonnegative endpoint values of an affine piece
};

// Canonical modulus form: every affine piece split at its zero crossing so
// endpoint values are nonnegative. All measures and integrals below are
// exact in the breakpoint data.
std::vector<Segment> abs_segments(const PLGraphFunction& f) {
    std::vector<Segment> segs;
    for (const auto& e : f.edges) {
        for (size_t k = 0; k + 1 < e.x.size(); ++k) {
            const double len = e.x[k + 1] - e.x[k];
            const double y0 = e.y[k], y1 = e.y[k + 1];
            if ((y0 < 0.0) != (y1 < 0.0) && y0 != 0.0 && y1 != 0.0) {
                const double c = len * y0 / (y0 - y1);  // crossing offset
                segs.push_back({std::abs(y0), 0.0, c});
                segs.push_back({0.0, std::abs(y1), len - c});
            } else {
                segs.push_back({std::abs(y0), std::abs(y1), len});
            }
        }
    }
    return segs;
}

LevelMeasure measure_of(const std::vector<Segment>& segs, double s) {
    LevelMeasure m{0.0, 0.0};
    for (const auto& g : segs) {
        if (g.len == 0.0) continue;
        if (g.v0 == g.v1) {
            if (g.v0 >= s) m.lambda += g.len;
            if (g.v0 > s) m.mu_strict += g.len;
        } else {
            const double lo = std::min(g.v0, g.v1), hi = std::max(g.v0, g.v1);
            const double frac =
                s <= lo ? 1.0 : (s > hi ? 0.0 : (hi - s) / (hi - lo));
            m.lambda += g.len * frac;
            // affine nonconstant pieces have measure-zero level sets
            m.mu_strict += g.len * (s < lo ? 1.0 : (s >= hi ? 0.0 : frac));
        }
    }
    return m;
}

}  // namespace

void PLGraphFunction::validate() const {
    if (N < 1 || static_cast<int>(edges.size()) != N)
        throw std::invalid_argument("PLGraphFunction: edge count mismatch");
    for (const auto& e : edges) {
        if (e.x.size() != e.y.size())
            throw std::invalid_argument("PLGraphFunction: breakpoint size mismatch");
        if (e.x.empty()) continue;
        if (e.x.front() != 0.0)
            throw std::invalid_argument("PLGraphFunction: breakpoints must start at 0");
        for (size_t k = 0; k + 1 < e.x.size(); ++k)
            if (!(e.x[k] < e.x[k + 1]))
                throw std::invalid_argument(
                    "PLGraphFunction: breakpoints must be strictly increasing "
                    "(a duplicate abscissa would encode a discontinuity)");
        if (e.y.back() != 0.0)
            throw std::invalid_argument(
                "PLGraphFunction: compact support requires the final value 0");
    }
}

double PLGraphFunction::value(int edge, double x) const {
    const auto& e = edges[edge];
    if (e.x.empty() || x < e.x.front() || x > e.x.back()) return 0.0;
    const auto it = std::upper_bound(e.x.begin(), e.x.end(), x);
    if (it == e.x.begin()) return e.y.front();
    const size_t k = (it - e.x.begin()) - 1;
    if (k + 1 >= e.x.size()) return e.y.back();
    const double t = (x - e.x[k]) / (e.x[k + 1] - e.x[k]);
    return e.y[k] + t * (e.y[k + 1] - e.y[k]);
}

LevelMeasure level_measure(const PLGraphFunction& f, double s) {
    if (s < 0.0) throw std::domain_error("level_measure: s must be >= 0");
    f.validate();
    return measure_of(abs_segments(f), s);
}

PLGraphFunction rearrange(const PLGraphFunction& f) {
    f.validate();
    const auto segs = abs_segments(f);

    // All breakpoint levels of |f|, descending, with 0 as the floor.
    std::vector<double> levels{0.0};
    for (const auto& g : segs) {
        levels.push_back(g.v0);
        levels.push_back(g.v1);
    }
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // g breakpoints: at each level a (top down) the strict measure opens the
    // affine branch inverted from lambda and the non-strict measure closes
    // the plateau produced by a jump of lambda.
    PLEdge g;
    auto push = [&](double t, double a) {
        if (!g.x.empty() && (t <= g.x.back() || g.y.back() == 0.0)) return;
        g.x.push_back(t);
        g.y.push_back(a);
    };
    for (double a : levels) {
        const LevelMeasure m = measure_of(segs, a);
        if (g.x.empty()) {  // top level, mu_strict is 0 there
            g.x.push_back(m.mu_strict / f.N);
            g.y.push_back(a);
        } else {
            push(m.mu_strict / f.N, a);
        }
        push(m.lambda / f.N, a);  // plateau closing a jump of lambda
    }
    // Roundoff guard: the level-0 point can coincide with the previous one.
    if (g.y.back() != 0.0) g.y.back() = 0.0;

    PLGraphFunction out(f.N);
    for (auto& e : out.edges) e = g;
    return out;
}

double pl_lp_norm(const PLGraphFunction& f, double p) {
    if (p < 1.0) throw std::domain_error("pl_lp_norm: p must be >= 1");
    f.validate();
    double s = 0.0;
    for (const auto& g : abs_segments(f)) {
        if (g.len == 0.0) continue;
        if (g.v0 == g.v1) {
            s += g.len * std::pow(g.v0, p);
        } else {
            const double lo = std::min(g.v0, g.v1), hi = std::max(g.v0, g.v1);
            s += g.len * (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) /
                 ((p + 1.0) * (hi - lo));
        }
    }
    return s;
}

double pl_kinetic(const PLGraphFunction& f) {
    f.validate();
    double s = 0.0;
    for (const auto& e : f.edges)
        for (size_t k = 0; k + 1 < e.x.size(); ++k) {
            const double len = e.x[k + 1] - e.x[k];
            if (len == 0.0) continue;
            const double slope = (e.y[k + 1] - e.y[k]) / len;
            s += slope * slope * len;
        }
    return s;
}

PLGraphFunction pl_from_graph_function(const GraphFunction& f) {
    PLGraphFunction out(f.params.N);
    const double dx = f.grid.dx();
    for (int j = 0; j < f.params.N; ++j) {
        auto& e = out.edges[j];
        e.x.reserve(f.grid.M + 1);
        e.y.reserve(f.grid.M + 1);
        for (int k = 0; k <= f.grid.M; ++k) {
            e.x.push_back(k * dx);
            e.y.push_back(std::abs(f.values[j][k]));
        }
        e.y.back() = 0.0;  // Dirichlet truncation
    }
    return out;
}

GraphFunction pl_to_graph_function(const PLGraphFunction& f,
                                   const StarGraphParams& params,
                                   const GridSpec& grid) {
    return GraphFunction::from_profiles(params, grid, [&](int j, double x) {
        return cplx(f.value(j, x), 0.0);
    });
}

}  // namespace graphnls
