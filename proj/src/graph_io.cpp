#include "oddpath/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace oddpath {
namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw SolverError(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (v < 0 || v > 100'000'000) fail(line, std::string(what) + " out of range: " + tok);
    return static_cast<int>(v);
  } catch (const SolverError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, std::string("malformed ") + what + " '" + tok + "'");
  }
}

Rational parse_weight(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception& e) {
    fail(line, std::string("malformed weight token '") + tok + "'");
  }
}

struct PendingConstraint {
  int line;
  bool even;
  std::vector<int> ids;
};

void add_constraints(Instance& inst, const std::vector<PendingConstraint>& pending) {
  std::vector<char> seen(inst.g.m(), 0);
  for (const auto& pc : pending) {
    int e;
    if (pc.ids.size() == 1) {
      e = pc.ids[0];
      if (e >= inst.g.m()) fail(pc.line, "constraint edge id out of range");
    } else {
      auto id = inst.g.edge_id(pc.ids[0], pc.ids[1]);
      if (!id) fail(pc.line, "constraint names a missing edge");
      e = *id;
    }
    if (seen[e]) fail(pc.line, "edge constrained twice");
    seen[e] = 1;
    (pc.even ? inst.constraints.f_even : inst.constraints.f_odd).push_back(e);
  }
}

}  // namespace

Instance parse_graph_text(std::string_view text) {
  Instance inst;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool header = false;
  int declared_m = 0;
  std::vector<PendingConstraint> pending;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "p") {
      if (header) fail(line, "duplicate header");
      if (tok.size() != 4 || tok[1] != "odd") fail(line, "expected 'p odd <n> <m>'");
      inst.g = WeightedGraph(parse_int(tok[2], line, "vertex count"));
      declared_m = parse_int(tok[3], line, "edge count");
      header = true;
      continue;
    }
    if (!header) fail(line, "missing 'p odd <n> <m>' header");
    if (kind == "e") {
      if (tok.size() != 4) fail(line, "expected 'e <u> <v> <weight>'");
      int u = parse_int(tok[1], line, "vertex");
      int v = parse_int(tok[2], line, "vertex");
      Rational w = parse_weight(tok[3], line);
      try {
        inst.g.add_edge(u, v, w);
      } catch (const SolverError& e) {
        fail(line, e.what());
      }
    } else if (kind == "s" || kind == "t") {
      if (tok.size() != 2) fail(line, "expected '" + kind + " <vertex>'");
      int v = parse_int(tok[1], line, "vertex");
      if (!inst.g.valid_vertex(v)) fail(line, "terminal out of range");
      (kind == "s" ? inst.s : inst.t) = v;
    } else if (kind == "c") {
      if ((tok.size() != 3 && tok.size() != 4) || (tok[1] != "even" && tok[1] != "odd"))
        fail(line, "expected 'c even|odd <edge-id>' or 'c even|odd <u> <v>'");
      PendingConstraint pc{line, tok[1] == "even", {}};
      for (std::size_t i = 2; i < tok.size(); ++i) pc.ids.push_back(parse_int(tok[i], line, "id"));
      pending.push_back(pc);
    } else {
      fail(line, "unknown line type '" + kind + "'");
    }
  }
  if (!header) fail(line, "empty input");
  if (inst.g.m() != declared_m)
    fail(line, "header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(inst.g.m()));
  add_constraints(inst, pending);
  return inst;
}

Instance parse_graph_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SolverError(Errc::Parse, std::string("json: ") + e.what());
  }
  auto bad = [](const std::string& m) -> SolverError { return SolverError(Errc::Parse, "json: " + m); };
  try {
    Instance inst;
    if (!j.contains("n")) throw bad("missing n");
    int n = j.at("n").get<int>();
    if (n < 0) throw bad("negative n");
    inst.g = WeightedGraph(n);
    int idx = 0;
    for (const auto& e : j.value("edges", json::array())) {
      int u, v;
      json w;
      if (e.is_array() && e.size() == 3) {
        u = e[0].get<int>();
        v = e[1].get<int>();
        w = e[2];
      } else if (e.is_object()) {
        u = e.at("u").get<int>();
        v = e.at("v").get<int>();
        w = e.at("w");
      } else {
        throw bad("edge " + std::to_string(idx) + " malformed");
      }
      Rational wt;
      try {
        wt = w.is_string() ? Rational::parse(w.get<std::string>()) : Rational(w.get<std::int64_t>());
      } catch (const std::exception&) {
        throw bad("edge " + std::to_string(idx) + " has a malformed weight");
      }
      try {
        inst.g.add_edge(u, v, wt);
      } catch (const SolverError& ex) {
        throw bad("edge " + std::to_string(idx) + ": " + ex.what());
      }
      ++idx;
    }
    for (const char* key : {"s", "t"}) {
      if (!j.contains(key) || j[key].is_null()) continue;
      int v = j[key].get<int>();
      if (!inst.g.valid_vertex(v)) throw bad(std::string(key) + " out of range");
      (key[0] == 's' ? inst.s : inst.t) = v;
    }
    if (j.contains("constraints")) {
      const auto& c = j["constraints"];
      for (int e : c.value("even", std::vector<int>{})) inst.constraints.f_even.push_back(e);
      for (int e : c.value("odd", std::vector<int>{})) inst.constraints.f_odd.push_back(e);
      try {
        inst.constraints.labels(inst.g.m());
      } catch (const SolverError& ex) {
        throw bad(ex.what());
      }
    }
    return inst;
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
}

Instance parse_instance(std::string_view text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    if (ch == '{') return parse_graph_json(text);
    break;
  }
  return parse_graph_text(text);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SolverError(Errc::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_graph_text(const Instance& inst) {
  std::ostringstream out;
  out << "p odd " << inst.g.n() << " " << inst.g.m() << "\n";
  for (const Edge& e : inst.g.edges()) out << "e " << e.u << " " << e.v << " " << e.w << "\n";
  if (inst.s) out << "s " << *inst.s << "\n";
  if (inst.t) out << "t " << *inst.t << "\n";
  for (int e : inst.constraints.f_even) out << "c even " << e << "\n";
  for (int e : inst.constraints.f_odd) out << "c odd " << e << "\n";
  return out.str();
}

std::string write_graph_json(const Instance& inst) {
  nlohmann::json j;
  j["n"] = inst.g.n();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : inst.g.edges()) j["edges"].push_back({e.u, e.v, e.w.to_string()});
  if (inst.s) j["s"] = *inst.s;
  if (inst.t) j["t"] = *inst.t;
  if (!inst.constraints.f_even.empty() || !inst.constraints.f_odd.empty())
    j["constraints"] = {{"even", inst.constraints.f_even}, {"odd", inst.constraints.f_odd}};
  return j.dump();
}

}  // namespace oddpath
