#pragma once

#include <iosfwd>
#include <string>

#include "graphnls/graph_function.hpp"
#include "graphnls/rearrangement.hpp"

namespace graphnls {

// 17 significant digits, enough to round-trip a double exactly.
std::string fmt17(double x);

// CSV with header `edge,x,re,im`, rows sorted by (edge, x), the vertex row
// repeated once per edge. Lines starting with '#' are metadata and skipped
// on read. The reader rebuilds the grid from the rows and rejects files
// whose per-edge vertex samples disagree by more than 1e-12.
void write_graph_function_csv(std::ostream& os, const GraphFunction& f);
void write_graph_function_csv(const std::string& path, const GraphFunction& f,
                              const std::string& header_comment = "");
GraphFunction read_graph_function_csv(std::istream& is,
                                      const StarGraphParams& params);
GraphFunction read_graph_function_csv(const std::string& path,
                                      const StarGraphParams& params);

// Piecewise-linear breakpoint CSV with header `edge,x,y`.
void write_pl_csv(std::ostream& os, const PLGraphFunction& f);
void write_pl_csv(const std::string& path, const PLGraphFunction& f,
                  const std::string& header_comment = "");
PLGraphFunction read_pl_csv(std::istream& is);
PLGraphFunction read_pl_csv(const std::string& path);

}  // namespace graphnls
