#include "latflow/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace latflow {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::SchemaError, path + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<IndexPair> get_pairs(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of [i, j] pairs");
  std::vector<IndexPair> out;
  for (size_t k = 0; k < j.size(); ++k) {
    const std::string at = path + "[" + std::to_string(k) + "]";
    const json& item = j[k];
    if (!item.is_array() || item.size() != 2) schema_fail(at, "expected a pair [i, j]");
    out.push_back({get_int(item[0], at + "[0]"), get_int(item[1], at + "[1]")});
  }
  return out;
}

std::vector<int> get_int_row(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of integers");
  std::vector<int> out;
  for (size_t k = 0; k < j.size(); ++k)
    out.push_back(get_int(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::vector<int>> get_table(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of rows");
  std::vector<std::vector<int>> out;
  for (size_t k = 0; k < j.size(); ++k)
    out.push_back(get_int_row(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::string> get_names(const json& obj, const std::string& path, size_t expected) {
  auto it = obj.find("names");
  if (it == obj.end()) return {};
  const std::string at = join_path(path, "names");
  if (!it->is_array()) schema_fail(at, "expected an array of strings");
  if (it->size() != expected)
    schema_fail(at, "expected " + std::to_string(expected) + " names, got " +
                        std::to_string(it->size()));
  std::vector<std::string> out;
  for (size_t k = 0; k < it->size(); ++k)
    out.push_back(get_string((*it)[k], at + "[" + std::to_string(k) + "]"));
  return out;
}

int key_to_index(const std::string& key, const std::string& path) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    schema_fail(path, "key \"" + key + "\" is not a vertex index");
  try {
    return std::stoi(key);
  } catch (const std::exception&) {
    schema_fail(path, "key \"" + key + "\" is out of integer range");
  }
}

std::pair<Lattice, LatticeRepresentation> parse_lattice(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  const std::string rep = get_string(require(j, "representation", path),
                                     join_path(path, "representation"));
  const int m = get_int(require(j, "m", path), join_path(path, "m"));
  std::vector<std::string> names = get_names(j, path, static_cast<size_t>(std::max(m, 0)));

  if (rep == "cover") {
    const auto pairs = get_pairs(require(j, "covers", path), join_path(path, "covers"));
    const Poset poset = cover_to_poset(validate_cover(m, pairs));
    return {poset_to_algebra(poset, std::move(names)), LatticeRepresentation::Cover};
  }
  if (rep == "poset") {
    const auto pairs = get_pairs(require(j, "leq", path), join_path(path, "leq"));
    return {poset_to_algebra(make_poset(m, pairs), std::move(names)),
            LatticeRepresentation::Poset};
  }
  if (rep == "algebra") {
    const auto meet = get_table(require(j, "meet", path), join_path(path, "meet"));
    const auto join = get_table(require(j, "join", path), join_path(path, "join"));
    return {Lattice::from_tables(m, meet, join, std::move(names)),
            LatticeRepresentation::Algebra};
  }
  schema_fail(join_path(path, "representation"),
              "expected \"cover\", \"poset\" or \"algebra\", got \"" + rep + "\"");
}

ControlFlowGraph parse_cfg(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  const int n = get_int(require(j, "n", path), join_path(path, "n"));
  const auto edges = get_pairs(require(j, "edges", path), join_path(path, "edges"));
  const int entry = get_int(require(j, "entry", path), join_path(path, "entry"));
  const int exit = get_int(require(j, "exit", path), join_path(path, "exit"));
  auto names = get_names(j, path, static_cast<size_t>(std::max(n, 0)));
  return validate_cfg(n, edges, entry, exit, std::move(names));
}

std::vector<std::vector<int>> parse_functions(const json& j, int vertex_count) {
  if (!j.is_array()) schema_fail("functions", "expected an array of transfer tables");
  if (static_cast<int>(j.size()) != vertex_count) {
    // name the first vertex whose table is missing, or the first excess slot
    const int at = std::min<int>(static_cast<int>(j.size()), vertex_count);
    schema_fail("functions." + std::to_string(at),
                j.size() < static_cast<size_t>(vertex_count)
                    ? "missing transfer table for this vertex"
                    : "table without a matching vertex (expected " +
                          std::to_string(vertex_count) + " tables)");
  }
  std::vector<std::vector<int>> tables;
  for (int v = 0; v < vertex_count; ++v)
    tables.push_back(get_int_row(j[v], "functions." + std::to_string(v)));
  return tables;
}

DfaSystem parse_system(const json& j, LatticeRepresentation& representation_out) {
  auto [lattice, rep] = parse_lattice(require(j, "lattice", ""), "lattice");
  representation_out = rep;
  ControlFlowGraph cfg = parse_cfg(require(j, "cfg", ""), "cfg");
  auto tables = parse_functions(require(j, "functions", ""), cfg.vertex_count);
  const json& q = require(j, "query", "");
  if (!q.is_object()) schema_fail("query", "expected an object");
  const int qv = get_int(require(q, "vertex", "query"), "query.vertex");
  const int qval = get_int(require(q, "value", "query"), "query.value");
  return make_system(std::move(cfg), std::move(lattice), std::move(tables), qv, qval);
}

MonotoneCircuit parse_circuit(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  const int n = get_int(require(j, "vertices", path), join_path(path, "vertices"));
  const auto pairs = get_pairs(require(j, "edges", path), join_path(path, "edges"));
  std::vector<std::pair<int, int>> edges(pairs.begin(), pairs.end());

  std::map<int, GateKind> gates;
  if (auto it = j.find("gates"); it != j.end()) {
    const std::string at = join_path(path, "gates");
    if (!it->is_object()) schema_fail(at, "expected an object of vertex -> \"and\"/\"or\"");
    for (const auto& [key, value] : it->items()) {
      const std::string entry_path = at + "." + key;
      const std::string kind = get_string(value, entry_path);
      if (kind != "and" && kind != "or")
        schema_fail(entry_path, "expected \"and\" or \"or\", got \"" + kind + "\"");
      gates[key_to_index(key, entry_path)] = kind == "and" ? GateKind::And : GateKind::Or;
    }
  }

  std::map<int, int> inputs;
  if (auto it = j.find("inputs"); it != j.end()) {
    const std::string at = join_path(path, "inputs");
    if (!it->is_object()) schema_fail(at, "expected an object of vertex -> bit");
    for (const auto& [key, value] : it->items()) {
      const std::string entry_path = at + "." + key;
      inputs[key_to_index(key, entry_path)] = get_int(value, entry_path);
    }
  }

  const int output = get_int(require(j, "output", path), join_path(path, "output"));
  return validate_circuit(n, edges, gates, inputs, output);
}

GrInstance parse_graph(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  GrInstance g;
  g.vertex_count = get_int(require(j, "vertices", path), join_path(path, "vertices"));
  g.edges = get_pairs(require(j, "edges", path), join_path(path, "edges"));
  g.source = get_int(require(j, "source", path), join_path(path, "source"));
  g.target = get_int(require(j, "target", path), join_path(path, "target"));
  if (g.vertex_count <= 0) schema_fail(join_path(path, "vertices"), "need at least one vertex");
  for (int endpoint : {g.source, g.target})
    if (endpoint < 0 || endpoint >= g.vertex_count)
      fail(ErrorCode::IndexOutOfRange,
           "graph endpoint " + std::to_string(endpoint) + " out of range", endpoint);
  for (const auto& [a, b] : g.edges)
    for (int endpoint : {a, b})
      if (endpoint < 0 || endpoint >= g.vertex_count)
        fail(ErrorCode::IndexOutOfRange,
             "graph edge endpoint " + std::to_string(endpoint) + " out of range", endpoint);
  return g;
}

json lattice_to_json(const Lattice& lattice, LatticeRepresentation representation) {
  json j;
  j["m"] = lattice.size();
  if (!lattice.names().empty()) j["names"] = lattice.names();
  switch (representation) {
    case LatticeRepresentation::Algebra:
      j["representation"] = "algebra";
      j["meet"] = lattice.meet_table();
      j["join"] = lattice.join_table();
      break;
    case LatticeRepresentation::Poset: {
      j["representation"] = "poset";
      json pairs = json::array();
      for (int a = 0; a < lattice.size(); ++a)
        for (int b = 0; b < lattice.size(); ++b)
          if (lattice.leq(a, b)) pairs.push_back({a, b});
      j["leq"] = std::move(pairs);
      break;
    }
    case LatticeRepresentation::Cover: {
      j["representation"] = "cover";
      json pairs = json::array();
      for (int a = 0; a < lattice.size(); ++a)
        for (int b = 0; b < lattice.size(); ++b) {
          if (a == b || !lattice.leq(a, b)) continue;
          bool immediate = true;
          for (int c = 0; c < lattice.size() && immediate; ++c)
            if (c != a && c != b && lattice.leq(a, c) && lattice.leq(c, b)) immediate = false;
          if (immediate) pairs.push_back({a, b});
        }
      j["covers"] = std::move(pairs);
      break;
    }
  }
  return j;
}

json pairs_to_json(const std::vector<IndexPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json system_to_json(const DfaSystem& sys) {
  json j;
  j["lattice"] = lattice_to_json(sys.lattice, LatticeRepresentation::Algebra);
  json cfg;
  cfg["n"] = sys.cfg.vertex_count;
  cfg["edges"] = pairs_to_json(sys.cfg.edges);
  cfg["entry"] = sys.cfg.entry;
  cfg["exit"] = sys.cfg.exit;
  if (!sys.cfg.names.empty()) cfg["names"] = sys.cfg.names;
  j["cfg"] = std::move(cfg);
  json functions = json::array();
  for (const auto& f : sys.functions) functions.push_back(f.table);
  j["functions"] = std::move(functions);
  j["query"] = {{"vertex", sys.query_vertex}, {"value", sys.query_value}};
  return j;
}

json circuit_to_json(const MonotoneCircuit& c) {
  json j;
  j["vertices"] = c.vertex_count;
  json edges = json::array();
  for (const auto& [a, b] : c.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  json gates = json::object();
  for (const auto& [v, kind] : c.gates)
    gates[std::to_string(v)] = kind == GateKind::And ? "and" : "or";
  j["gates"] = std::move(gates);
  json inputs = json::object();
  for (const auto& [v, bit] : c.inputs) inputs[std::to_string(v)] = bit;
  j["inputs"] = std::move(inputs);
  j["output"] = c.output;
  return j;
}

json graph_to_json(const GrInstance& g) {
  json j;
  j["vertices"] = g.vertex_count;
  j["edges"] = pairs_to_json(g.edges);
  j["source"] = g.source;
  j["target"] = g.target;
  return j;
}

}  // namespace

InstanceDocument parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t upto = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
    fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + e.what(), line);
  }
  if (!j.is_object()) schema_fail("(top-level)", "expected a JSON object");

  const bool wants_system = j.contains("cfg") || j.contains("functions") || j.contains("query");
  const bool has_circuit = j.contains("circuit");
  const bool has_graph = j.contains("graph");
  const bool bare_lattice = !wants_system && (j.contains("lattice") || j.contains("representation"));
  if (wants_system + has_circuit + has_graph + bare_lattice != 1)
    schema_fail("(top-level)",
                "expected exactly one instance kind: a solver system (lattice/cfg/functions/"
                "query), a \"circuit\", a \"graph\", or a bare lattice");

  InstanceDocument doc;
  if (wants_system) {
    doc.system = parse_system(j, doc.lattice_representation);
  } else if (has_circuit) {
    doc.circuit = parse_circuit(j["circuit"], "circuit");
  } else if (has_graph) {
    doc.graph = parse_graph(j["graph"], "graph");
  } else {
    const json& lat = j.contains("lattice") ? j["lattice"] : j;
    const std::string path = j.contains("lattice") ? "lattice" : "";
    auto [lattice, rep] = parse_lattice(lat, path);
    doc.lattice_only = std::move(lattice);
    doc.lattice_representation = rep;
  }
  return doc;
}

InstanceDocument parse_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string serialize_instance(const InstanceDocument& doc) {
  json j;
  if (doc.system) {
    j = system_to_json(*doc.system);
  } else if (doc.circuit) {
    j["circuit"] = circuit_to_json(*doc.circuit);
  } else if (doc.graph) {
    j["graph"] = graph_to_json(*doc.graph);
  } else if (doc.lattice_only) {
    j["lattice"] = lattice_to_json(*doc.lattice_only, LatticeRepresentation::Algebra);
  } else {
    fail(ErrorCode::SchemaError, "(top-level): empty document");
  }
  return j.dump(2) + "\n";
}

std::string serialize_lattice(const Lattice& lattice, LatticeRepresentation representation) {
  return lattice_to_json(lattice, representation).dump(2) + "\n";
}

}  // namespace latflow
