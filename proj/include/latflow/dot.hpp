#pragma once

#include <string>

#include "latflow/dfa.hpp"

// Graphviz DOT renderings. Output is byte-deterministic: vertices in index
// order, edges in (source, target) index order.

namespace latflow {

// One box per CFG vertex ("v{i+1}") labeled with its display name and
// transfer table; one edge line per CFG edge.
std::string emit_cfg_dot(const DfaSystem& sys);

// The product graph over (polarity, vertex, element) triples. Node ids are
// "v{polarity}_{vertex+1}_{element+1}"; the two polarities form two rank
// groups.
std::string emit_product_dot(const DfaSystem& sys);

}  // namespace latflow
