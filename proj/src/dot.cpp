#include "latflow/dot.hpp"

#include <sstream>

#include "latflow/solvers.hpp"

namespace latflow {

namespace {

std::string escape_label(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::string table_label(const Lattice& lattice, const TransferFunction& f) {
  std::string out = "f = [";
  for (int x = 0; x < f.size(); ++x) {
    if (x > 0) out += ", ";
    out += lattice.element_name(f.apply(x));
  }
  return out + "]";
}

std::string product_node(int polarity, int vertex, int element) {
  return "v" + std::to_string(polarity) + "_" + std::to_string(vertex + 1) + "_" +
         std::to_string(element + 1);
}

}  // namespace

std::string emit_cfg_dot(const DfaSystem& sys) {
  std::ostringstream out;
  out << "digraph cfg {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (int v = 0; v < sys.cfg.vertex_count; ++v) {
    out << "  v" << v + 1 << " [label=\"" << escape_label(sys.cfg.vertex_name(v)) << "\\n"
        << escape_label(table_label(sys.lattice, sys.functions[v])) << "\"];\n";
  }
  for (const auto& [a, b] : sys.cfg.edges) out << "  v" << a + 1 << " -> v" << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_product_dot(const DfaSystem& sys) {
  const ProductGraph pg = build_product_graph(sys);
  std::ostringstream out;
  out << "digraph product {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for (int polarity = 0; polarity < 2; ++polarity) {
    out << "  { rank=same;\n";
    for (int v = 0; v < pg.cfg_vertex_count; ++v)
      for (int e = 0; e < pg.lattice_size; ++e) {
        out << "    " << product_node(polarity, v, e) << " [label=\"(" << polarity << ", "
            << escape_label(sys.cfg.vertex_name(v)) << ", "
            << escape_label(sys.lattice.element_name(e)) << ")\"];\n";
      }
    out << "  }\n";
  }
  for (int polarity = 0; polarity < 2; ++polarity)
    for (int v = 0; v < pg.cfg_vertex_count; ++v)
      for (int e = 0; e < pg.lattice_size; ++e) {
        const int from = pg.id(polarity, v, e);
        for (int to : pg.adjacency[from]) {
          const int to_polarity = to / (pg.cfg_vertex_count * pg.lattice_size);
          const int to_vertex = to / pg.lattice_size % pg.cfg_vertex_count;
          const int to_element = to % pg.lattice_size;
          out << "  " << product_node(polarity, v, e) << " -> "
              << product_node(to_polarity, to_vertex, to_element) << ";\n";
        }
      }
  out << "}\n";
  return out.str();
}

}  // namespace latflow
