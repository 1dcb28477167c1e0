#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gneseek {

/// Parsed and validated experiment configuration. Flat key = value format;
/// see parse_config for the key set.
struct RunConfig {
  std::string game_kind;       // "cournot" | "simplex_test"
  int n_players = 0;
  int game_horizon = 0;        // defaults to run horizon when absent

  std::string graph_kind;      // "ring" | "path" | "complete" | "edges"
  std::vector<std::pair<int, int>> edges;  // 0-based after parsing

  std::string geometry_kind;   // "euclidean" | "entropy"

  double a1 = 0.0;
  double a2 = 0.0;

  int horizon = 0;
  std::uint64_t seed = 1;
  bool diagnostics = false;
  double l_override = 0.0;     // diagnostics.l_override; 0 = use game constants

  std::string source_path;     // where this config was read from
};

/// Parse and validate a config file.
///
/// Accepted keys: game.kind, game.n_players, game.horizon (optional),
/// graph.kind, graph.edges (required iff graph.kind = "edges"; 1-based
/// vertex pairs like [[1,2],[2,3]]), geometry.kind, schedule.a1,
/// schedule.a2, run.horizon, run.seed, run.diagnostics (optional, default
/// false), diagnostics.l_override (optional; replaces the bound constant L
/// in diagnostics, for fault-injection runs). '#' starts a comment. Unknown
/// keys are hard errors. Throws ParseError with line info, ValidationError
/// naming the violated range.
RunConfig parse_config(const std::string& path);

}  // namespace gneseek
