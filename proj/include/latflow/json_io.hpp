#pragma once

#include <optional>
#include <string>

#include "latflow/circuit.hpp"
#include "latflow/dfa.hpp"
#include "latflow/reductions.hpp"

// Instance files are single JSON documents. A solver instance carries
// "lattice" (tagged with one of the three representations), "cfg",
// "functions" and "query"; a circuit instance carries "circuit"; a
// reachability instance carries "graph"; a bare lattice carries just
// "lattice" (or is itself a lattice object with a "representation" key).

namespace latflow {

enum class LatticeRepresentation { Cover, Poset, Algebra };

struct InstanceDocument {
  std::optional<DfaSystem> system;
  std::optional<Lattice> lattice_only;
  std::optional<MonotoneCircuit> circuit;
  std::optional<GrInstance> graph;

  // which representation the lattice section used in the source text;
  // irrelevant to document identity (everything is algebra internally)
  LatticeRepresentation lattice_representation = LatticeRepresentation::Algebra;

  bool operator==(const InstanceDocument& other) const {
    return system == other.system && lattice_only == other.lattice_only &&
           circuit == other.circuit && graph == other.graph;
  }
};

// Throws SyntaxError (detail = 1-based line) on malformed JSON, SchemaError
// (message names the dotted field path) on structural problems, and the
// relevant module's validation errors on semantic ones.
InstanceDocument parse_instance_text(const std::string& text);
InstanceDocument parse_instance_file(const std::string& path);

// Deterministic pretty-printed JSON; lattices are emitted in algebra form.
// parse_instance_text(serialize_instance(doc)) == doc.
std::string serialize_instance(const InstanceDocument& doc);

// A bare lattice document in the requested representation.
std::string serialize_lattice(const Lattice& lattice, LatticeRepresentation representation);

}  // namespace latflow
