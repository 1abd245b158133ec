#include "latflow/cli.hpp"

#include <exception>
#include <fstream>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "latflow/dot.hpp"
#include "latflow/json_io.hpp"
#include "latflow/solvers.hpp"

namespace latflow {

namespace {

using nlohmann::json;

DfaSystem load_system(const std::string& path) {
  InstanceDocument doc = parse_instance_file(path);
  if (!doc.system)
    fail(ErrorCode::SchemaError,
         "(top-level): this command needs a full solver instance "
         "(lattice, cfg, functions, query)");
  return std::move(*doc.system);
}

void write_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) fail(ErrorCode::SyntaxError, "cannot write file: " + out_path);
  file << text;
}

json solution_json(const DfaSystem& sys, const std::vector<int>& solution) {
  json rows = json::array();
  for (int v = 0; v < sys.cfg.vertex_count; ++v)
    rows.push_back({{"vertex", sys.cfg.vertex_name(v)},
                    {"value", sys.lattice.element_name(solution[v])}});
  return rows;
}

json query_json(const DfaSystem& sys) {
  return {{"vertex", sys.cfg.vertex_name(sys.query_vertex)},
          {"value", sys.lattice.element_name(sys.query_value)}};
}

int emit_solver_report(const std::string& command, const DfaSystem& sys, const SolveReport& rep,
                       bool as_json, std::ostream& out) {
  const bool fixpoint = command == "mfp";
  if (as_json) {
    json j;
    j["command"] = command;
    j["decision"] = rep.decision;
    j["query"] = query_json(sys);
    j["solution"] = solution_json(sys, rep.solution);
    j["statistics"] =
        fixpoint ? json{{"iterations", rep.iterations}} : json{{"visited", rep.visited}};
    j["warnings"] = json::array();
    out << j.dump(2) << "\n";
  } else {
    out << "command: " << command << "\n";
    out << "decision: " << (rep.decision ? "true" : "false") << "\n";
    out << "query: " << sys.cfg.vertex_name(sys.query_vertex) << " = "
        << sys.lattice.element_name(sys.query_value) << "\n";
    out << "solution:\n";
    for (int v = 0; v < sys.cfg.vertex_count; ++v)
      out << "  " << sys.cfg.vertex_name(v) << " = "
          << sys.lattice.element_name(rep.solution[v]) << "\n";
    if (fixpoint)
      out << "iterations: " << rep.iterations << "\n";
    else
      out << "visited product vertices: " << rep.visited << "\n";
  }
  return rep.decision ? 0 : 1;
}

int run_check(const std::string& path, bool as_json, std::ostream& out) {
  const DfaSystem sys = load_system(path);
  const bool monotone = system_is_monotone(sys);
  bool distributive = true;
  for (const auto& f : sys.functions)
    if (!check_distributive(sys.lattice, f)) distributive = false;

  const SolveReport mop = solve_mop(sys);
  std::vector<std::string> warnings;
  SolveReport mfp;
  if (monotone) {
    mfp = solve_mfp(sys);
    const TupleValue fixpoint(sys.lattice, mfp.solution);
    const TupleValue path_meet(sys.lattice, mop.solution);
    if (!tuple_leq(fixpoint, path_meet))
      throw std::logic_error(
          "internal invariant violated: the fixpoint solution is not below the "
          "path-meet solution on a monotone system");
  } else {
    warnings.push_back("system is not monotone; the fixpoint solver was skipped");
  }

  if (as_json) {
    json j;
    j["command"] = "check";
    j["monotone"] = monotone;
    j["distributive"] = distributive;
    j["query"] = query_json(sys);
    json rows = json::array();
    for (int v = 0; v < sys.cfg.vertex_count; ++v) {
      json row;
      row["vertex"] = sys.cfg.vertex_name(v);
      if (monotone) row["mfp"] = sys.lattice.element_name(mfp.solution[v]);
      row["mop"] = sys.lattice.element_name(mop.solution[v]);
      rows.push_back(std::move(row));
    }
    j["solution"] = std::move(rows);
    json decision;
    if (monotone) decision["mfp"] = mfp.decision;
    decision["mop"] = mop.decision;
    j["decision"] = std::move(decision);
    j["warnings"] = warnings;
    out << j.dump(2) << "\n";
  } else {
    out << "command: check\n";
    out << "monotone: " << (monotone ? "true" : "false") << "\n";
    out << "distributive: " << (distributive ? "true" : "false") << "\n";
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    out << "solution:\n";
    for (int v = 0; v < sys.cfg.vertex_count; ++v) {
      out << "  " << sys.cfg.vertex_name(v) << ":";
      if (monotone) out << " mfp = " << sys.lattice.element_name(mfp.solution[v]) << ",";
      out << " mop = " << sys.lattice.element_name(mop.solution[v]) << "\n";
    }
    out << "query: " << sys.cfg.vertex_name(sys.query_vertex) << " = "
        << sys.lattice.element_name(sys.query_value) << "\n";
    out << "decision:";
    if (monotone) out << " mfp = " << (mfp.decision ? "true" : "false") << ",";
    out << " mop = " << (mop.decision ? "true" : "false") << "\n";
    if (monotone) out << "safety: fixpoint <= path-meet at every vertex\n";
  }
  return 0;
}

const Lattice& lattice_of(const InstanceDocument& doc) {
  if (doc.lattice_only) return *doc.lattice_only;
  if (doc.system) return doc.system->lattice;
  fail(ErrorCode::SchemaError, "(top-level): this command needs a lattice section");
}

int run_lattice_check(const std::string& path, bool as_json, std::ostream& out) {
  const InstanceDocument doc = parse_instance_file(path);
  const Lattice& lattice = lattice_of(doc);
  if (as_json) {
    json j;
    j["command"] = "lattice check";
    j["valid"] = true;
    j["m"] = lattice.size();
    j["bottom"] = lattice.element_name(lattice.bottom());
    j["top"] = lattice.element_name(lattice.top());
    j["height"] = lattice.height();
    j["warnings"] = json::array();
    out << j.dump(2) << "\n";
  } else {
    out << "command: lattice check\n";
    out << "valid: true\n";
    out << "elements: " << lattice.size() << "\n";
    out << "bottom: " << lattice.element_name(lattice.bottom()) << "\n";
    out << "top: " << lattice.element_name(lattice.top()) << "\n";
    out << "height: " << lattice.height() << "\n";
  }
  return 0;
}

int run_lattice_convert(const std::string& path, const std::string& to, std::ostream& out) {
  const InstanceDocument doc = parse_instance_file(path);
  const Lattice& lattice = lattice_of(doc);
  const LatticeRepresentation rep =
      to == "poset" ? LatticeRepresentation::Poset : LatticeRepresentation::Algebra;
  out << serialize_lattice(lattice, rep);
  return 0;
}

int run_reduce_mcv(const std::string& path, const std::string& out_path, std::ostream& out) {
  const InstanceDocument doc = parse_instance_file(path);
  if (!doc.circuit)
    fail(ErrorCode::SchemaError, "(top-level): this command needs a \"circuit\" section");
  InstanceDocument reduced;
  reduced.system = reduce_mcv_to_mfp(*doc.circuit);
  write_text(serialize_instance(reduced), out_path, out);
  return 0;
}

int run_reduce_gr(const std::string& path, const std::string& out_path, std::ostream& out) {
  const InstanceDocument doc = parse_instance_file(path);
  if (!doc.graph)
    fail(ErrorCode::SchemaError, "(top-level): this command needs a \"graph\" section");
  InstanceDocument reduced;
  reduced.system = reduce_gr_to_mop(*doc.graph);
  write_text(serialize_instance(reduced), out_path, out);
  return 0;
}

int run_dot(const std::string& path, bool product, const std::string& out_path,
            std::ostream& out) {
  const DfaSystem sys = load_system(path);
  write_text(product ? emit_product_dot(sys) : emit_cfg_dot(sys), out_path, out);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"data-flow analysis over finite lattices: fixpoint and path-meet solvers"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::string to;
  bool as_json = false;
  bool product = false;

  CLI::App* mfp = app.add_subcommand("mfp", "greatest-fixpoint solution and query decision");
  mfp->add_option("file", file, "instance file")->required();
  mfp->add_flag("--json", as_json, "machine-readable report");

  CLI::App* mop = app.add_subcommand("mop", "exact path-meet solution and query decision");
  mop->add_option("file", file, "instance file")->required();
  mop->add_flag("--json", as_json, "machine-readable report");

  CLI::App* check =
      app.add_subcommand("check", "run both solvers, compare them, report properties");
  check->add_option("file", file, "instance file")->required();
  check->add_flag("--json", as_json, "machine-readable report");

  CLI::App* lattice = app.add_subcommand("lattice", "lattice-only operations");
  lattice->require_subcommand(1);
  CLI::App* convert = lattice->add_subcommand("convert", "re-emit in another representation");
  convert->add_option("--to", to, "target representation")
      ->required()
      ->check(CLI::IsMember({"poset", "algebra"}));
  convert->add_option("file", file, "lattice or instance file")->required();
  CLI::App* lattice_check = lattice->add_subcommand("check", "validate and summarize");
  lattice_check->add_option("file", file, "lattice or instance file")->required();
  lattice_check->add_flag("--json", as_json, "machine-readable report");

  CLI::App* reduce = app.add_subcommand("reduce", "build solver instances from other problems");
  reduce->require_subcommand(1);
  CLI::App* mcv = reduce->add_subcommand("mcv", "monotone circuit value -> fixpoint instance");
  mcv->add_option("file", file, "circuit file")->required();
  mcv->add_option("-o,--output", out_path, "write the instance here (default stdout)");
  CLI::App* gr = reduce->add_subcommand("gr", "graph reachability -> path-meet instance");
  gr->add_option("file", file, "graph file")->required();
  gr->add_option("-o,--output", out_path, "write the instance here (default stdout)");

  CLI::App* dot = app.add_subcommand("dot", "render the instance as Graphviz DOT");
  dot->add_option("file", file, "instance file")->required();
  dot->add_flag("--product", product, "render the product graph instead of the CFG");
  dot->add_option("-o,--output", out_path, "write the DOT text here (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mfp->parsed()) {
      const DfaSystem sys = load_system(file);
      return emit_solver_report("mfp", sys, solve_mfp(sys), as_json, out);
    }
    if (mop->parsed()) {
      const DfaSystem sys = load_system(file);
      return emit_solver_report("mop", sys, solve_mop(sys), as_json, out);
    }
    if (check->parsed()) return run_check(file, as_json, out);
    if (convert->parsed()) return run_lattice_convert(file, to, out);
    if (lattice_check->parsed()) return run_lattice_check(file, as_json, out);
    if (mcv->parsed()) return run_reduce_mcv(file, out_path, out);
    if (gr->parsed()) return run_reduce_gr(file, out_path, out);
    if (dot->parsed()) return run_dot(file, product, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (as_json) {
      json j;
      j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace latflow
