#pragma once

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

/// (column x, row y), both 1-based, row 1 at the bottom.
using Cell = std::pair<int, int>;

/// Boxes in the plane, some of them marked.
struct KohnertDiagram {
  std::set<Cell> boxes;
  std::set<Cell> marked;

  bool is_marked(Cell c) const { return marked.contains(c); }
  /// Marked boxes are boxes; every coordinate is positive.
  bool valid() const;

  friend bool operator==(const KohnertDiagram&, const KohnertDiagram&) = default;
  friend auto operator<=>(const KohnertDiagram&, const KohnertDiagram&) = default;
};

/// Column i holds boxes at heights 1..a_i.
KohnertDiagram initial_diagram(const WeakComposition& a);

/// One move: the box leaving (x, y) lands at (target, y).
struct KohnertMove {
  Cell from;
  int target = 0;
  bool k_move = false;
  KohnertDiagram result;
};

/// Every single move. A column's top box moves when it is unmarked and the
/// rightmost empty spot left of it in its row is reached without crossing
/// a marked box.
std::vector<KohnertMove> all_moves(const KohnertDiagram& d);
std::set<KohnertDiagram> kohnert_moves(const KohnertDiagram& d);
/// Same targets, but the origin stays behind as a marked box.
std::set<KohnertDiagram> k_kohnert_moves(const KohnertDiagram& d);

/// Everything reachable from initial_diagram(a), the initial one included.
std::set<KohnertDiagram> closure(const WeakComposition& a);

/// beta^{#marked} prod x_i^{#boxes in column i}, in n variables.
BetaPolynomial diagram_weight(const KohnertDiagram& d, int n);

/// Row y becomes tableau column s+1-y. Unmarked columns of the row fill the
/// tableau column in increasing order; a marked x joins the cell of the
/// nearest unmarked box to its left. Throws std::invalid_argument when a row
/// does not hold exactly r unmarked boxes, or a box sits above row s.
SetValuedTableau phi(const KohnertDiagram& d, int r, int s, int n);
KohnertDiagram phi_inverse(const SetValuedTableau& t);

/// The move on tableaux matching a (K-)Kohnert move of the box in diagram
/// column x. std::nullopt when no such move exists.
std::optional<SetValuedTableau> svt_kohnert_move(const SetValuedTableau& t, int x, bool k_variant);

}  // namespace kcrystal
