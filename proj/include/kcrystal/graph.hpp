#pragma once

#include <string>
#include <vector>

#include "kcrystal/tableau.hpp"

namespace kcrystal {

struct CrystalEdge {
  SetValuedTableau from;
  SetValuedTableau to;
  int i = 0;
  bool k_edge = false;
};

struct CrystalGraph {
  std::vector<SetValuedTableau> nodes;  // canonical order
  std::vector<CrystalEdge> edges;       // by source node, then i, f_i before f_i^K
};

/// f_i edges on svt^n(shape), plus f_i^K edges when with_k is set (the
/// K-operators need a rectangle; other shapes throw).
CrystalGraph crystal_graph(const WeakComposition& shape, int n, bool with_k);

/// Graphviz text: solid edges for f_i, dashed for f_i^K, labelled by i.
std::string to_dot(const CrystalGraph& g);

}  // namespace kcrystal
