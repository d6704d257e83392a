// Serial vs OpenMP kernel timings across grid sizes. Prints a table; the
// public kernel entry points dispatch to the faster side of the cutoff.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graphnls/kernels.hpp"
#include "graphnls/rng.hpp"

using namespace graphnls;
using kernels::cplx;
using kernels::Field;

namespace {

Field make_field(int N, int M, CounterRng& rng) {
    Field v(N, std::vector<cplx>(M + 1));
    for (auto& edge : v)
        for (auto& z : edge) z = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return v;
}

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-14s %10s %12s %12s %8s\n", "kernel", "points", "serial ms",
                "omp ms", "speedup");

    CounterRng rng(1);
    volatile double sink = 0.0;
    for (int M : {3000, 30000, 300000, 3000000}) {
        const int N = 3;
        Field f = make_field(N, M, rng);
        Field g = make_field(N, M, rng);
        const double dx = 1e-2;

        struct Row {
            const char* name;
            std::function<void()> serial, par;
        };
        Field ps = f, pp = f;
        const std::vector<Row> rows{
            {"trapz_abs_pow",
             [&] { sink = kernels::serial::trapz_abs_pow(f, dx, 4.0); },
             [&] { sink = kernels::par::trapz_abs_pow(f, dx, 4.0); }},
            {"grad_sq", [&] { sink = kernels::serial::grad_sq(f, dx); },
             [&] { sink = kernels::par::grad_sq(f, dx); }},
            {"sup_abs", [&] { sink = kernels::serial::sup_abs(f); },
             [&] { sink = kernels::par::sup_abs(f); }},
            {"h1_dot",
             [&] { sink = kernels::serial::h1_dot(f, g, dx).real(); },
             [&] { sink = kernels::par::h1_dot(f, g, dx).real(); }},
            {"phase_rotate",
             [&] { kernels::serial::phase_rotate(ps, 1.0, 1e-3); },
             [&] { kernels::par::phase_rotate(pp, 1.0, 1e-3); }},
        };
        const int reps = M <= 30000 ? 200 : 10;
        for (const auto& r : rows) {
            const double ts = time_ms(r.serial, reps);
            const double tp = time_ms(r.par, reps);
            std::printf("%-14s %10d %12.4f %12.4f %7.2fx\n", r.name,
                        N * (M + 1), ts, tp, ts / tp);
        }
    }
    (void)sink;
    return 0;
}
