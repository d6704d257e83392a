#include "graphnls/norms.hpp"

#include <cmath>

#include "graphnls/kernels.hpp"

namespace graphnls {

double lp_pow(const GraphFunction& f, double p) {
    if (p < 1.0) throw std::domain_error("lp_norm: p must be >= 1");
    return kernels::trapz_abs_pow(f.values, f.grid.dx(), p);
}

double lp_norm(const GraphFunction& f, double p) {
    if (std::isinf(p)) return kernels::sup_abs(f.values);
    return std::pow(lp_pow(f, p), 1.0 / p);
}

double grad_sq_norm(const GraphFunction& f) {
    return kernels::grad_sq(f.values, f.grid.dx());
}

double h1_norm(const GraphFunction& f) {
    return std::sqrt(lp_pow(f, 2.0) + grad_sq_norm(f));
}

cplx h1_inner(const GraphFunction& f, const GraphFunction& g) {
    if (!f.same_grid(g)) throw std::invalid_argument("h1_inner: grid mismatch");
    return kernels::h1_dot(f.values, g.values, f.grid.dx());
}

double orbital_distance(const GraphFunction& f, const GraphFunction& g) {
    if (!f.same_grid(g))
        throw std::invalid_argument("orbital_distance: grid mismatch");
    const double ff = lp_pow(f, 2.0) + grad_sq_norm(f);
    const double gg = lp_pow(g, 2.0) + grad_sq_norm(g);
    const cplx gf = h1_inner(g, f);
    const double d2 = ff + gg - 2.0 * std::abs(gf);
    return std::sqrt(std::max(d2, 0.0));
}

}  // namespace graphnls
