#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "graphnls/types.hpp"

namespace graphnls {

using cplx = std::complex<double>;

// Complex-valued sampled function on the star graph: N edges times a uniform
// grid of M+1 samples, values[j][k] ~ psi_j(k dx). Members of the energy
// space share the vertex sample values[j][0] across edges and vanish at the
// truncation boundary values[j][M].
struct GraphFunction {
    StarGraphParams params;
    GridSpec grid;
    std::vector<std::vector<cplx>> values;

    GraphFunction(const StarGraphParams& p, const GridSpec& g)
        : params(p), grid(g),
          values(p.N, std::vector<cplx>(g.M + 1, cplx(0.0, 0.0))) {}

    // Samples one profile per edge; the vertex sample of edge 0 is copied to
    // every edge so the continuity invariant holds exactly.
    static GraphFunction from_profiles(
        const StarGraphParams& p, const GridSpec& g,
        const std::function<cplx(int edge, double x)>& profile) {
        GraphFunction f(p, g);
        const double dx = g.dx();
        for (int j = 0; j < p.N; ++j)
            for (int k = 0; k <= g.M; ++k)
                f.values[j][k] = profile(j, k * dx);
        for (int j = 1; j < p.N; ++j) f.values[j][0] = f.values[0][0];
        for (int j = 0; j < p.N; ++j) f.values[j][g.M] = cplx(0.0, 0.0);
        return f;
    }

    cplx vertex() const { return values[0][0]; }

    double max_vertex_mismatch() const {
        double m = 0.0;
        for (int j = 1; j < params.N; ++j)
            m = std::max(m, std::abs(values[j][0] - values[0][0]));
        return m;
    }

    // Energy-space membership: shared vertex sample and Dirichlet tail.
    void require_energy_space(double tol = 1e-12) const {
        if (max_vertex_mismatch() > tol)
            throw std::invalid_argument(
                "GraphFunction: vertex continuity violated (not in the energy space)");
    }

    bool same_grid(const GraphFunction& o) const {
        return params.N == o.params.N && grid == o.grid;
    }

    GraphFunction& operator*=(cplx c) {
        for (auto& edge : values)
            for (auto& v : edge) v *= c;
        return *this;
    }
};

inline GraphFunction operator*(cplx c, GraphFunction f) {
    f *= c;
    return f;
}

// Real/imaginary split of a GraphFunction; reassembles exactly.
struct RealPair {
    std::vector<std::vector<double>> u, v;

    explicit RealPair(const GraphFunction& f) {
        u.resize(f.values.size());
        v.resize(f.values.size());
        for (size_t j = 0; j < f.values.size(); ++j) {
            u[j].reserve(f.values[j].size());
            v[j].reserve(f.values[j].size());
            for (cplx z : f.values[j]) {
                u[j].push_back(z.real());
                v[j].push_back(z.imag());
            }
        }
    }

    GraphFunction reassemble(const StarGraphParams& p, const GridSpec& g) const {
        GraphFunction f(p, g);
        for (size_t j = 0; j < u.size(); ++j)
            for (size_t k = 0; k < u[j].size(); ++k)
                f.values[j][k] = cplx(u[j][k], v[j][k]);
        return f;
    }
};

}  // namespace graphnls
