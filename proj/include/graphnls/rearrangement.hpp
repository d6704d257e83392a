#pragma once

#include <utility>
#include <vector>

#include "graphnls/graph_function.hpp"

namespace graphnls {

// Exact piecewise-linear real function on one edge: strictly increasing
// breakpoints starting at 0, compact support (last value 0, zero beyond).
struct PLEdge {
    std::vector<double> x, y;
};

// The rearrangement substrate: continuous piecewise-linear function on the
// star graph, stored edge by edge with exact breakpoint arithmetic.
struct PLGraphFunction {
    int N = 0;
    std::vector<PLEdge> edges;

    PLGraphFunction() = default;
    explicit PLGraphFunction(int N_) : N(N_), edges(N_) {}

    void validate() const;

    double value(int edge, double x) const;
};

struct LevelMeasure {
    double lambda;     // |{ |f| >= s }|
    double mu_strict;  // |{ |f| > s }|
};

// Exact level-set measures from segment-wise linear interpolation of the
// crossing points. s = 0 is accepted and returns the covered-domain length
// as lambda and the support measure as mu_strict; s < 0 is a domain error.
LevelMeasure level_measure(const PLGraphFunction& f, double s);

// Symmetric-decreasing rearrangement: all N edges carry
// g(t) = sup{ s : lambda(s) > N t }, realized exactly by inverting the
// piecewise-affine branches of lambda between consecutive breakpoint levels
// and inserting plateaus at its jumps. No sampling is involved.
PLGraphFunction rearrange(const PLGraphFunction& f);

// Exact integral of |f|^p over the graph (closed-form power integral per
// affine segment). Note: returns the integral, i.e. the p-th power of the
// L^p norm.
double pl_lp_norm(const PLGraphFunction& f, double p);

// Exact Dirichlet energy, sum of slope^2 * length over segments.
double pl_kinetic(const PLGraphFunction& f);

// Piecewise-linear interpolant of the modulus of a sampled graph function.
PLGraphFunction pl_from_graph_function(const GraphFunction& f);

// Sample a PL function (all edges) back onto a grid as a real GraphFunction.
GraphFunction pl_to_graph_function(const PLGraphFunction& f,
                                   const StarGraphParams& params,
                                   const GridSpec& grid);

}  // namespace graphnls
