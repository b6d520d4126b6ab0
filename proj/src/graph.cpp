#include "kcrystal/graph.hpp"

#include <sstream>
#include <stdexcept>

#include "kcrystal/crystal.hpp"

namespace kcrystal {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

CrystalGraph crystal_graph(const WeakComposition& shape, int n, bool with_k) {
  CrystalGraph g;
  g.nodes = enumerate_svt(n, shape);
  if (with_k && !g.nodes.empty() && !g.nodes.front().is_rectangle())
    throw std::invalid_argument("K-crystal edges need a rectangular shape");
  for (const auto& t : g.nodes) {
    for (int i = 1; i < n; ++i) {
      if (auto next = crystal_f(t, i)) g.edges.push_back({t, *next, i, false});
      if (!with_k) continue;
      if (auto next = kcrystal_f(t, i)) g.edges.push_back({t, *next, i, true});
    }
  }
  return g;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box];\n";
  for (const auto& t : g.nodes) os << "  " << quoted(t.str()) << ";\n";
  for (const auto& e : g.edges) {
    os << "  " << quoted(e.from.str()) << " -> " << quoted(e.to.str()) << " [label=\"" << e.i << "\"";
    if (e.k_edge) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kcrystal
