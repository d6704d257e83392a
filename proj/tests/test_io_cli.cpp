#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "graphnls/io.hpp"
#include "graphnls/rng.hpp"
#include "graphnls/stationary.hpp"

using namespace graphnls;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("graphnls_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

#ifdef GRAPHNLS_CLI_PATH
int cli(const std::string& args) {
    const int rc = std::system((std::string(GRAPHNLS_CLI_PATH) + " " + args +
                                " > /dev/null 2>&1")
                                   .c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}
#endif

}  // namespace

TEST_CASE("graph function csv roundtrip is exact") {
    StarGraphParams p(3, -1.0, 1.0);
    GridSpec g(10.0, 200);
    CounterRng rng(11);
    GraphFunction f = GraphFunction::from_profiles(p, g, [&](int, double x) {
        return cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) *
               std::exp(-0.3 * x);
    });

    std::stringstream ss;
    write_graph_function_csv(ss, f);
    const GraphFunction back = read_graph_function_csv(ss, p);
    REQUIRE(back.grid == g);
    double m = 0.0;
    for (int j = 0; j < p.N; ++j)
        for (int k = 0; k <= g.M; ++k)
            m = std::max(m, std::abs(back.values[j][k] - f.values[j][k]));
    CHECK(m == 0.0);  // 17 significant digits round-trip doubles exactly
}

TEST_CASE("reader rejects vertex-discontinuous files") {
    StarGraphParams p(2, 0.0, 1.0);
    GraphFunction f(p, GridSpec(5.0, 50));
    for (auto& e : f.values)
        for (size_t k = 0; k + 1 < e.size(); ++k) e[k] = cplx(1.0, 0.0);
    std::stringstream ss;
    write_graph_function_csv(ss, f);
    std::string text = ss.str();
    const auto pos = text.rfind("1,0,1,");  // edge 1 vertex row
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "1,0,2,");
    std::stringstream tampered(text);
    CHECK_THROWS_WITH_AS(read_graph_function_csv(tampered, p),
                         doctest::Contains("vertex"), std::runtime_error);
}

TEST_CASE("pl csv roundtrip") {
    PLGraphFunction f(2);
    f.edges[0] = PLEdge{{0.0, 0.5, 2.0}, {1.0, -0.25, 0.0}};
    f.edges[1] = PLEdge{{0.0, 1.0 / 3.0}, {1.0, 0.0}};
    std::stringstream ss;
    write_pl_csv(ss, f);
    const PLGraphFunction back = read_pl_csv(ss);
    REQUIRE(back.N == 2);
    CHECK(back.edges[0].x == f.edges[0].x);
    CHECK(back.edges[0].y == f.edges[0].y);
    CHECK(back.edges[1].x == f.edges[1].x);
    CHECK(back.edges[1].y == f.edges[1].y);
}

#ifdef GRAPHNLS_CLI_PATH

TEST_CASE("cli exit codes") {
    const fs::path d = fresh_dir("exit");
    CHECK(cli("frobnicate") == 64);
    CHECK(cli("") == 64);
    // inadmissible j=1 branch: omega must exceed alpha^2/(N-2j)^2 = 1
    CHECK(cli("stationary --j 1 --omega 0.5 --alpha -1 --N 3 --out " +
              (d / "x").string()) == 2);
    CHECK(cli("rearrange --out " + (d / "y").string()) == 2);
    CHECK(cli("stationary --out " + (d / "ok").string()) == 0);
}

TEST_CASE("cli stationary artifacts parse back") {
    const fs::path d = fresh_dir("stat");
    REQUIRE(cli("stationary --omega 2 --grid-L 20 --grid-M 1000 --out " +
                d.string()) == 0);
    const GraphFunction f = read_graph_function_csv(
        (d / "stationary.csv").string(), StarGraphParams(3, -1.0, 1.0));
    CHECK(f.grid == GridSpec(20.0, 1000));
    const StationarySpec s(StarGraphParams(3, -1.0, 1.0), 0, 2.0);
    CHECK(std::abs(f.vertex().real() - soliton_profile(s.a_j, 2.0, 1.0)) < 1e-12);
    CHECK(slurp(d / "stationary.json").find("nehari_residual") !=
          std::string::npos);
}

TEST_CASE("cli scan is deterministic") {
    const fs::path a = fresh_dir("scan_a"), b = fresh_dir("scan_b");
    const std::string args = "scan --omega-lin 0.2 2 10 --seed 7 --out ";
    REQUIRE(cli(args + a.string()) == 0);
    REQUIRE(cli(args + b.string() + " --threads 4") == 0);
    const std::string ca = slurp(a / "scan.csv");
    CHECK(ca == slurp(b / "scan.csv"));  // byte identical across thread counts
    CHECK(ca.find("skipped") == std::string::npos);
    // a sweep crossing the admissibility bound names it in the skipped rows
    const fs::path c = fresh_dir("scan_c");
    REQUIRE(cli("scan --omega-lin 0.05 0.2 4 --out " + c.string()) == 0);
    CHECK(slurp(c / "scan.csv").find("skipped(") != std::string::npos);
}

TEST_CASE("cli rearrange on the tent fixture") {
    const fs::path d = fresh_dir("tent");
    REQUIRE(cli("rearrange --tent --N 3 --out " + d.string()) == 0);
    const std::string rep = slurp(d / "rearrange.json");
    CHECK(rep.find("\"kinetic_after\": 4.5") != std::string::npos);
    CHECK(rep.find("\"N_over_2_bound_satisfied\": true") != std::string::npos);
    // the emitted PL csv reads back and feeds the pipeline again
    REQUIRE(cli("rearrange --input " + (d / "rearranged.csv").string() +
                " --out " + (d / "again").string()) == 0);
}

#endif  // GRAPHNLS_CLI_PATH
