#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "oddpath/graph.hpp"

namespace oddpath {

/// A graph file: the graph, optional terminals and optional parity constraints.
struct Instance {
  WeightedGraph g;
  std::optional<int> s;
  std::optional<int> t;
  ParityConstraints constraints;
};

/// Text format, 0-based vertex ids:
///   p odd <n> <m>
///   e <u> <v> <weight>        weight as integer, decimal or p/q
///   s <vertex>
///   t <vertex>
///   c even|odd <edge-id>      or  c even|odd <u> <v>
/// Blank lines and lines starting with '#' are ignored.
/// Throws SolverError(Parse) with the offending line number.
Instance parse_graph_text(std::string_view text);

/// JSON mirror: {"n":N, "edges":[[u,v,"w"],...], "s":x, "t":y,
///               "constraints":{"even":[ids], "odd":[ids]}}
/// Weights may be JSON integers or strings in any text-format notation.
Instance parse_graph_json(std::string_view text);

/// Picks JSON when the first non-blank character is '{'.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

std::string write_graph_text(const Instance& inst);
std::string write_graph_json(const Instance& inst);

}  // namespace oddpath
