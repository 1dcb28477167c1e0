#include "gneseek/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "gneseek/errors.hpp"

namespace gneseek {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct RawEntry {
  std::string value;
  int line = 0;
};

long long parse_int(const std::string& key, const RawEntry& e) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(e.value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != e.value.size() || e.value.empty()) {
    throw ParseError(key + " wants an integer, got '" + e.value + "' (line " +
                     std::to_string(e.line) + ")");
  }
  return v;
}

double parse_double(const std::string& key, const RawEntry& e) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(e.value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != e.value.size() || e.value.empty()) {
    throw ParseError(key + " wants a number, got '" + e.value + "' (line " +
                     std::to_string(e.line) + ")");
  }
  return v;
}

bool parse_bool(const std::string& key, const RawEntry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw ParseError(key + " wants true or false, got '" + e.value + "' (line " +
                   std::to_string(e.line) + ")");
}

std::vector<std::pair<int, int>> parse_edges(const RawEntry& e) {
  // [[1,2],[2,3]] with 1-based vertex ids; whitespace is free.
  std::string s;
  for (char c : e.value) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&](const std::string& why) {
    return ParseError("graph.edges " + why + " (line " + std::to_string(e.line) + ")");
  };
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw bad("must look like [[1,2],[2,3]]");
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t p = 1;
  while (p < s.size() - 1) {
    if (s[p] == ',') {
      ++p;
      continue;
    }
    if (s[p] != '[') throw bad("has a malformed pair");
    const std::size_t close = s.find(']', p);
    if (close == std::string::npos) throw bad("has an unterminated pair");
    const std::string pair = s.substr(p + 1, close - p - 1);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos) throw bad("pair needs two vertices");
    int a = 0, b = 0;
    try {
      std::size_t used = 0;
      a = std::stoi(pair.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      const std::string second = pair.substr(comma + 1);
      b = std::stoi(second, &used);
      if (used != second.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw bad("pair has a non-integer vertex");
    }
    if (a < 1 || b < 1) {
      throw InvalidEdge("vertex ids are 1-based, got (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
    edges.emplace_back(a - 1, b - 1);
    p = close + 1;
  }
  if (edges.empty()) throw bad("lists no pairs");
  return edges;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open config file '" + path + "'");
  }
  static const std::set<std::string> kKnown = {
      "game.kind",      "game.n_players", "game.horizon",
      "graph.kind",     "graph.edges",    "geometry.kind",
      "schedule.a1",    "schedule.a2",    "run.horizon",
      "run.seed",       "run.diagnostics", "diagnostics.l_override"};

  std::map<std::string, RawEntry> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno) + " is not 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (kKnown.find(key) == kKnown.end()) {
      throw ParseError("unknown key '" + key + "' (line " + std::to_string(lineno) + ")");
    }
    if (raw.count(key) != 0) {
      throw ParseError("duplicate key '" + key + "' (line " + std::to_string(lineno) + ")");
    }
    raw[key] = RawEntry{value, lineno};
  }

  for (const char* required : {"game.kind", "game.n_players", "graph.kind",
                               "geometry.kind", "schedule.a1", "schedule.a2",
                               "run.horizon"}) {
    if (raw.count(required) == 0) {
      throw ParseError(std::string("missing required key '") + required + "'");
    }
  }

  RunConfig cfg;
  cfg.source_path = path;

  cfg.game_kind = raw["game.kind"].value;
  if (cfg.game_kind != "cournot" && cfg.game_kind != "simplex_test") {
    throw ValidationError("game.kind must be cournot or simplex_test, got '" +
                          cfg.game_kind + "'");
  }
  const long long n = parse_int("game.n_players", raw["game.n_players"]);
  if (n < 2 || n > 100000) {
    throw ValidationError("game.n_players must lie in [2, 100000], got " +
                          std::to_string(n));
  }
  cfg.n_players = static_cast<int>(n);

  const long long horizon = parse_int("run.horizon", raw["run.horizon"]);
  if (horizon < 1 || horizon > 100000000) {
    throw ValidationError("run.horizon must lie in [1, 1e8], got " +
                          std::to_string(horizon));
  }
  cfg.horizon = static_cast<int>(horizon);

  if (raw.count("game.horizon") != 0) {
    const long long gh = parse_int("game.horizon", raw["game.horizon"]);
    if (gh < horizon) {
      throw ValidationError("game.horizon must be >= run.horizon");
    }
    cfg.game_horizon = static_cast<int>(gh);
  } else {
    cfg.game_horizon = cfg.horizon;
  }

  cfg.graph_kind = raw["graph.kind"].value;
  if (cfg.graph_kind != "ring" && cfg.graph_kind != "path" &&
      cfg.graph_kind != "complete" && cfg.graph_kind != "edges") {
    throw ValidationError("graph.kind must be ring, path, complete or edges, got '" +
                          cfg.graph_kind + "'");
  }
  if (cfg.graph_kind == "edges") {
    if (raw.count("graph.edges") == 0) {
      throw ParseError("graph.kind = edges needs a graph.edges list");
    }
    cfg.edges = parse_edges(raw["graph.edges"]);
    for (auto [a, b] : cfg.edges) {
      if (a >= cfg.n_players || b >= cfg.n_players) {
        throw InvalidEdge("edge (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                          ") names a vertex above game.n_players");
      }
    }
  } else if (raw.count("graph.edges") != 0) {
    throw ValidationError("graph.edges is only meaningful with graph.kind = edges");
  }

  cfg.geometry_kind = raw["geometry.kind"].value;
  if (cfg.geometry_kind != "euclidean" && cfg.geometry_kind != "entropy") {
    throw ValidationError("geometry.kind must be euclidean or entropy, got '" +
                          cfg.geometry_kind + "'");
  }
  if (cfg.game_kind == "cournot" && cfg.geometry_kind != "euclidean") {
    throw ValidationError("cournot plays on boxes; geometry.kind must be euclidean");
  }
  if (cfg.game_kind == "simplex_test" && cfg.geometry_kind != "entropy") {
    throw ValidationError("simplex_test plays on simplices; geometry.kind must be entropy");
  }

  cfg.a1 = parse_double("schedule.a1", raw["schedule.a1"]);
  if (!(cfg.a1 > 0.0 && cfg.a1 < 0.5)) {
    throw ValidationError("schedule.a1 must lie strictly in (0, 0.5)");
  }
  cfg.a2 = parse_double("schedule.a2", raw["schedule.a2"]);
  if (!(cfg.a2 > 2.0 / 3.0 && cfg.a2 < 1.0)) {
    throw ValidationError("schedule.a2 must lie strictly in (2/3, 1)");
  }

  if (raw.count("run.seed") != 0) {
    const long long seed = parse_int("run.seed", raw["run.seed"]);
    if (seed < 0) throw ValidationError("run.seed must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(seed);
  }
  if (raw.count("run.diagnostics") != 0) {
    cfg.diagnostics = parse_bool("run.diagnostics", raw["run.diagnostics"]);
  }
  if (raw.count("diagnostics.l_override") != 0) {
    cfg.l_override = parse_double("diagnostics.l_override", raw["diagnostics.l_override"]);
    if (!(cfg.l_override > 0.0)) {
      throw ValidationError("diagnostics.l_override must be positive when given");
    }
  }
  return cfg;
}

}  // namespace gneseek
