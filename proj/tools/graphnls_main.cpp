// graphnls command-line workbench: stationary states, time evolution,
// rearrangement, spectral stability checks, parameter scans.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "graphnls/dynamics.hpp"
#include "graphnls/functionals.hpp"
#include "graphnls/io.hpp"
#include "graphnls/norms.hpp"
#include "graphnls/rearrangement.hpp"
#include "graphnls/rng.hpp"
#include "graphnls/stability.hpp"
#include "graphnls/stationary.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace graphnls;

namespace {

struct Globals {
    double grid_L = 30.0;
    int grid_M = 3000;
    std::string out = "out";
    unsigned long long seed = 1;
    int threads = 0;

    GridSpec grid() const { return GridSpec(grid_L, grid_M); }
    fs::path path(const std::string& name) const {
        fs::create_directories(out);
        return fs::path(out) / name;
    }
    std::string stamp() const {
        return "rng=counter-splitmix64 seed=" + std::to_string(seed);
    }
};

void write_json(const fs::path& p, const json& j) {
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open for writing: " + p.string());
    os << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config: " + path);
    return json::parse(is);
}

StarGraphParams params_of(const json& j) {
    return StarGraphParams(j.value("N", 3), j.value("alpha", -1.0),
                           j.value("mu", 1.0));
}

// --- stationary -----------------------------------------------------------

int run_stationary(const Globals& g, int N, double alpha, double mu, int j,
                   double omega) {
    StarGraphParams params(N, alpha, mu);
    StationarySpec spec(params, j, omega);
    const GraphFunction state = build_state(spec, g.grid());

    write_graph_function_csv(g.path("stationary.csv").string(), state, g.stamp());
    json out{{"j", j},
             {"omega", omega},
             {"a_j", spec.a_j},
             {"action", state_action(spec)},
             {"nehari_residual", state_nehari_residual(spec)},
             {"mass", 0.5 * state_l2_squared(spec)}};
    if (j == 0) out["vk_slope"] = vk_slope(omega, params);
    write_json(g.path("stationary.json"), out);
    return 0;
}

// --- evolve ---------------------------------------------------------------

GraphFunction perturb(GraphFunction f, double eps, unsigned long long seed) {
    CounterRng rng(seed);
    for (auto& edge : f.values)
        for (auto& v : edge) v *= 1.0 + eps * rng.uniform(-1.0, 1.0);
    for (size_t j = 1; j < f.values.size(); ++j) f.values[j][0] = f.values[0][0];
    for (auto& edge : f.values) edge.back() = cplx(0.0, 0.0);
    return f;
}

int run_evolve(const Globals& g, const std::string& config_path) {
    const json cfg = read_json(config_path);
    const StarGraphParams params = params_of(cfg.value("params", json::object()));
    GridSpec grid = g.grid();
    if (cfg.contains("grid"))
        grid = GridSpec(cfg["grid"].value("L", g.grid_L),
                        cfg["grid"].value("M", g.grid_M));

    const json& jc = cfg.at("cfg");
    EvolutionConfig ec;
    ec.dt = jc.at("dt").get<double>();
    ec.T = jc.at("T").get<double>();
    ec.record_every = jc.value("record_every", 1);
    ec.solver_tol = jc.value("solver_tol", 1e-12);
    ec.record_snapshots = jc.value("record_snapshots", false);

    const json& init = cfg.at("initial");
    const std::string kind = init.at("kind").get<std::string>();
    const double omega = init.value("omega", 1.0);

    GraphFunction f0(params, grid);
    GraphFunction ref(params, grid);
    bool have_ref = false;
    if (kind == "stationary" || kind == "perturbed") {
        StationarySpec spec(params, init.value("j", 0), omega);
        ref = build_state(spec, grid);
        have_ref = true;
        f0 = kind == "perturbed"
                 ? perturb(ref, init.value("epsilon", 0.01), g.seed)
                 : ref;
    } else if (kind == "csv") {
        f0 = read_graph_function_csv(init.at("path").get<std::string>(), params);
        grid = f0.grid;
        ref = f0;
        have_ref = true;
    } else {
        throw std::invalid_argument("initial.kind must be stationary|perturbed|csv");
    }

    const TrajectoryRecord rec =
        evolve(f0, ec, params, have_ref ? &ref : nullptr);

    std::ofstream os(g.path("monitors.csv"));
    os << "# " << g.stamp() << "\nt,mass,energy,h1,orb_dist\n";
    for (size_t i = 0; i < rec.times.size(); ++i)
        os << fmt17(rec.times[i]) << ',' << fmt17(rec.mass[i]) << ','
           << fmt17(rec.energy[i]) << ',' << fmt17(rec.h1[i]) << ','
           << fmt17(rec.orbital.empty() ? 0.0 : rec.orbital[i]) << '\n';
    for (size_t i = 0; i < rec.snapshots.size(); ++i)
        write_graph_function_csv(
            g.path("snapshot_" + std::to_string(i) + ".csv").string(),
            rec.snapshots[i], g.stamp());

    json out{{"blew_up", rec.blew_up},
             {"boundary_mass_max", rec.boundary_mass_max},
             {"steps_recorded", rec.times.size()}};
    if (rec.blew_up) out["blowup_time"] = rec.blowup_time;
    write_json(g.path("evolve.json"), out);
    return rec.blew_up ? 3 : 0;
}

// --- rearrange ------------------------------------------------------------

PLGraphFunction tent_fixture(int N) {
    PLGraphFunction f(N);
    f.edges[0] = PLEdge{{0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}};
    for (int j = 1; j < N; ++j) f.edges[j] = PLEdge{{0.0}, {0.0}};
    return f;
}

int run_rearrange(const Globals& g, const std::string& input, bool tent,
                  int N, double alpha, double mu) {
    PLGraphFunction f;
    if (tent) {
        f = tent_fixture(N);
    } else {
        std::ifstream sniff(input);
        if (!sniff) throw std::invalid_argument("cannot open input: " + input);
        std::string first;
        while (std::getline(sniff, first)) {
            if (!first.empty() && first.back() == '\r') first.pop_back();
            if (!first.empty() && first[0] != '#') break;
        }
        if (first == "edge,x,y")
            f = read_pl_csv(input);
        else
            f = pl_from_graph_function(
                read_graph_function_csv(input, StarGraphParams(N, alpha, mu)));
    }
    f.validate();

    const PLGraphFunction r = rearrange(f);
    write_pl_csv(g.path("rearranged.csv").string(), r, g.stamp());

    json before, after;
    for (double p : {1.0, 2.0, 4.0}) {
        const std::string key = "p" + std::to_string(int(p));
        before[key] = pl_lp_norm(f, p);
        after[key] = pl_lp_norm(r, p);
    }
    const double kb = pl_kinetic(f), ka = pl_kinetic(r);
    const double cap = 0.25 * f.N * f.N * kb;
    write_json(g.path("rearrange.json"),
               json{{"lp_norms_before", before},
                    {"lp_norms_after", after},
                    {"kinetic_before", kb},
                    {"kinetic_after", ka},
                    {"N_over_2_bound_satisfied", ka <= cap * (1.0 + 1e-12) + 1e-300}});
    return 0;
}

// --- stability ------------------------------------------------------------

int run_stability(const Globals& g, const std::string& config_path) {
    json cfg = config_path.empty() ? json::object() : read_json(config_path);
    const StarGraphParams params = params_of(cfg.value("params", json::object()));
    const double omega = cfg.value("omega", 1.0);
    const int k = cfg.value("k", 6);
    GridSpec grid = eigen_grid();
    if (cfg.contains("grid"))
        grid = GridSpec(cfg["grid"].value("L", 20.0), cfg["grid"].value("M", 1000));

    StationarySpec spec(params, 0, omega);
    const LinearizationPair pair = assemble(spec, grid, k);
    const MorseReport rep = morse_report(pair);
    const VkCheck vk = vk_check(params, omega, cfg.value("d_omega", 1e-4));

    write_json(g.path("stability.json"),
               json{{"low_spectrum_plus", pair.low_spectrum_plus},
                    {"low_spectrum_minus", pair.low_spectrum_minus},
                    {"neg_counts", {{"plus", rep.neg_plus}, {"minus", rep.neg_minus}}},
                    {"kernel_residual", rep.kernel_residual_plus},
                    {"second_minus", rep.second_minus},
                    {"vk_analytic", vk.analytic},
                    {"vk_numeric", vk.numeric},
                    {"conclusive", rep.conclusive}});
    if (!rep.conclusive) {
        std::cerr << "stability: low-spectrum window inconclusive, raise k\n";
        return 3;
    }
    return 0;
}

// --- scan -----------------------------------------------------------------

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
}

int run_scan(const Globals& g, std::vector<double> omegas,
             std::vector<double> mus, std::vector<double> alphas,
             std::vector<int> Ns, const std::vector<double>& omega_lin) {
    if (!omega_lin.empty()) {
        if (omega_lin.size() != 3 || omega_lin[2] < 1 ||
            omega_lin[2] != std::floor(omega_lin[2]))
            throw std::invalid_argument("--omega-lin expects MIN MAX COUNT");
        omegas.clear();
        const int n = static_cast<int>(omega_lin[2]);
        for (int i = 0; i < n; ++i)
            omegas.push_back(n == 1 ? omega_lin[0]
                                    : omega_lin[0] + (omega_lin[1] - omega_lin[0]) *
                                                         i / (n - 1.0));
    }
    if (omegas.empty()) omegas = {1.0};
    if (mus.empty()) mus = {1.0};
    if (alphas.empty()) alphas = {-1.0};
    if (Ns.empty()) Ns = {3};
    std::sort(omegas.begin(), omegas.end());
    std::sort(mus.begin(), mus.end());
    std::sort(alphas.begin(), alphas.end());
    std::sort(Ns.begin(), Ns.end());

    struct Point {
        double omega, mu, alpha;
        int N;
    };
    std::vector<Point> pts;
    for (double omega : omegas)
        for (double mu : mus)
            for (double alpha : alphas)
                for (int N : Ns) pts.push_back({omega, mu, alpha, N});

    std::vector<std::string> rows(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        std::ostringstream row;
        row << fmt17(p.omega) << ',' << fmt17(p.mu) << ',' << fmt17(p.alpha)
            << ',' << p.N << ',' << fmt17(d0(p.omega, p.mu)) << ',';
        try {
            StationarySpec spec(StarGraphParams(p.N, p.alpha, p.mu), 0, p.omega);
            row << fmt17(state_action(spec)) << ','
                << fmt17(state_nehari_residual(spec));
        } catch (const std::domain_error& e) {
            const std::string why = "skipped(" + sanitize(e.what()) + ")";
            row << why << ',' << why;
        }
        row << ',' << fmt17(alpha_star(p.omega, p.mu, p.N));
        rows[i] = row.str();
    }

    std::ofstream os(g.path("scan.csv"));
    os << "# " << g.stamp()
       << "\nomega,mu,alpha,N,d0,action_ground,nehari_residual,alpha_star\n";
    for (const auto& r : rows) os << r << '\n';
    return 0;
}

// --- escape-demo ----------------------------------------------------------

int run_escape(const Globals& g, double omega, double mu, int N, int n_max) {
    if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    const double need = n_max + 12.0 / std::sqrt(omega);
    GridSpec grid(std::max(g.grid_L, need),
                  std::max(g.grid_M, static_cast<int>(200 * need)));

    std::ofstream os(g.path("escape.csv"));
    os << "# " << g.stamp() << "\nn,reduced_action,delta_n,d0_gap\n";
    const double limit = d0(omega, mu);
    for (int n = 1; n <= n_max; ++n) {
        const EscapeResult r = escape_demo(n, omega, mu, N, grid);
        os << n << ',' << fmt17(r.reduced_action) << ',' << fmt17(r.delta_n)
           << ',' << fmt17(r.reduced_action - limit) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NLS workbench on a star graph with a delta vertex"};
    app.require_subcommand(1);
    // let the global flags (--out, --seed, ...) appear after the subcommand
    app.fallthrough();

    Globals g;
    app.add_option("--grid-L", g.grid_L, "edge truncation length");
    app.add_option("--grid-M", g.grid_M, "cells per edge");
    app.add_option("--out", g.out, "output directory");
    app.add_option("--seed", g.seed, "RNG seed (counter-based generator)");
    app.add_option("--threads", g.threads,
                   "worker threads (GRAPHNLS_THREADS overrides)");

    int N = 3, j = 0, n_max = 12, tent_N = 3;
    double alpha = -1.0, mu = 1.0, omega = 1.0;
    std::string config, input;
    bool tent = false;
    std::vector<double> omegas, mus, alphas, omega_lin;
    std::vector<int> Ns;

    auto* st = app.add_subcommand("stationary", "build a stationary state");
    st->add_option("--N", N);
    st->add_option("--alpha", alpha);
    st->add_option("--mu", mu);
    st->add_option("--j", j, "number of bump edges");
    st->add_option("--omega", omega);

    auto* ev = app.add_subcommand("evolve", "Strang-split time evolution");
    ev->add_option("--config", config, "JSON config")->required();

    auto* re = app.add_subcommand("rearrange", "symmetric-decreasing rearrangement");
    re->add_option("--input", input, "GraphFunction or PL breakpoint CSV");
    re->add_flag("--tent", tent, "use the built-in tent fixture");
    re->add_option("--N", tent_N, "edges (tent fixture / GraphFunction CSV)");
    re->add_option("--alpha", alpha);
    re->add_option("--mu", mu);

    auto* sb = app.add_subcommand("stability", "linearization spectra + VK check");
    sb->add_option("--config", config, "JSON config (optional)");

    auto* sc = app.add_subcommand("scan", "parameter sweep");
    sc->add_option("--omega", omegas, "omega values");
    sc->add_option("--omega-lin", omega_lin, "MIN MAX COUNT")->expected(3);
    sc->add_option("--mu", mus, "mu values");
    sc->add_option("--alpha", alphas, "alpha values");
    sc->add_option("--N", Ns, "edge counts");

    auto* ed = app.add_subcommand("escape-demo",
                                  "reduced action of escaping soliton trials");
    ed->add_option("--omega", omega);
    ed->add_option("--mu", mu);
    ed->add_option("--N", N);
    ed->add_option("--n-max", n_max);

    for (auto* sub : {st, ev, re, sb, sc, ed}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    }

    if (const char* env = std::getenv("GRAPHNLS_THREADS")) g.threads = std::atoi(env);
#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    try {
        if (st->parsed()) return run_stationary(g, N, alpha, mu, j, omega);
        if (ev->parsed()) return run_evolve(g, config);
        if (re->parsed()) {
            if (!tent && input.empty())
                throw std::invalid_argument("rearrange: give --input or --tent");
            return run_rearrange(g, input, tent, tent_N, alpha, mu);
        }
        if (sb->parsed()) return run_stability(g, config);
        if (sc->parsed()) return run_scan(g, omegas, mus, alphas, Ns, omega_lin);
        if (ed->parsed()) return run_escape(g, omega, mu, N, n_max);
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 64;
}
