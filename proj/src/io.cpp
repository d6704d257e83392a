#include "graphnls/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphnls {
namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

bool next_data_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

double to_double(const std::string& s, const std::string& what) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("bad " + what + " field: '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error("bad " + what + " field: '" + s + "'");
    return v;
}

}  // namespace

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_graph_function_csv(std::ostream& os, const GraphFunction& f) {
    os << "edge,x,re,im\n";
    const double dx = f.grid.dx();
    for (int j = 0; j < f.params.N; ++j)
        for (int k = 0; k <= f.grid.M; ++k) {
            const cplx v = k == 0 ? f.vertex() : f.values[j][k];
            os << j << ',' << fmt17(k * dx) << ',' << fmt17(v.real()) << ','
               << fmt17(v.imag()) << '\n';
        }
}

void write_graph_function_csv(const std::string& path, const GraphFunction& f,
                              const std::string& header_comment) {
    auto os = open_out(path);
    if (!header_comment.empty()) os << "# " << header_comment << '\n';
    write_graph_function_csv(os, f);
}

GraphFunction read_graph_function_csv(std::istream& is,
                                      const StarGraphParams& params) {
    std::string line;
    if (!next_data_line(is, line) || line != "edge,x,re,im")
        throw std::runtime_error("expected header 'edge,x,re,im'");

    std::map<int, std::vector<std::pair<double, cplx>>> rows;
    while (next_data_line(is, line)) {
        auto f = split_csv(line);
        if (f.size() != 4) throw std::runtime_error("bad row: '" + line + "'");
        const int edge = static_cast<int>(to_double(f[0], "edge"));
        rows[edge].emplace_back(to_double(f[1], "x"),
                                cplx(to_double(f[2], "re"), to_double(f[3], "im")));
    }
    if (static_cast<int>(rows.size()) != params.N)
        throw std::runtime_error("expected " + std::to_string(params.N) +
                                 " edges, found " + std::to_string(rows.size()));

    const size_t npts = rows.begin()->second.size();
    if (npts < 9) throw std::runtime_error("too few samples per edge");
    const int M = static_cast<int>(npts) - 1;
    const double L = rows.begin()->second.back().first;
    GridSpec grid(L, M);
    const double dx = grid.dx();

    GraphFunction g(params, grid);
    int expect = 0;
    for (auto& [edge, pts] : rows) {
        if (edge != expect++)
            throw std::runtime_error("edges must be 0..N-1 without gaps");
        if (pts.size() != npts)
            throw std::runtime_error("edges have differing sample counts");
        for (int k = 0; k <= M; ++k) {
            if (std::abs(pts[k].first - k * dx) > 1e-9 * std::max(1.0, L))
                throw std::runtime_error("non-uniform grid on edge " +
                                         std::to_string(edge));
            g.values[edge][k] = pts[k].second;
        }
    }
    if (g.max_vertex_mismatch() > 1e-12)
        throw std::runtime_error("vertex samples disagree across edges");
    const cplx v0 = g.values[0][0];
    for (auto& edge : g.values) edge[0] = v0;
    return g;
}

GraphFunction read_graph_function_csv(const std::string& path,
                                      const StarGraphParams& params) {
    auto is = open_in(path);
    return read_graph_function_csv(is, params);
}

void write_pl_csv(std::ostream& os, const PLGraphFunction& f) {
    os << "edge,x,y\n";
    for (int j = 0; j < f.N; ++j)
        for (size_t k = 0; k < f.edges[j].x.size(); ++k)
            os << j << ',' << fmt17(f.edges[j].x[k]) << ','
               << fmt17(f.edges[j].y[k]) << '\n';
}

void write_pl_csv(const std::string& path, const PLGraphFunction& f,
                  const std::string& header_comment) {
    auto os = open_out(path);
    if (!header_comment.empty()) os << "# " << header_comment << '\n';
    write_pl_csv(os, f);
}

PLGraphFunction read_pl_csv(std::istream& is) {
    std::string line;
    if (!next_data_line(is, line) || line != "edge,x,y")
        throw std::runtime_error("expected header 'edge,x,y'");

    std::map<int, PLEdge> edges;
    while (next_data_line(is, line)) {
        auto f = split_csv(line);
        if (f.size() != 3) throw std::runtime_error("bad row: '" + line + "'");
        const int edge = static_cast<int>(to_double(f[0], "edge"));
        edges[edge].x.push_back(to_double(f[1], "x"));
        edges[edge].y.push_back(to_double(f[2], "y"));
    }
    PLGraphFunction g;
    g.N = static_cast<int>(edges.size());
    int expect = 0;
    for (auto& [edge, pl] : edges) {
        if (edge != expect++)
            throw std::runtime_error("edges must be 0..N-1 without gaps");
        g.edges.push_back(std::move(pl));
    }
    g.validate();
    return g;
}

PLGraphFunction read_pl_csv(const std::string& path) {
    auto is = open_in(path);
    return read_pl_csv(is);
}

}  // namespace graphnls
