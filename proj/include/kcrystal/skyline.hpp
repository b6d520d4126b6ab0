#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

/// Bottom-justified filling of the skyline diagram of a weak composition.
/// Column c (1-based) has shape[c-1] cells, stored bottom (level 1) first.
/// The largest entry of a cell is its anchor, the others are free.
class SkylineTableau {
 public:
  SkylineTableau() = default;
  SkylineTableau(WeakComposition shape, std::vector<std::vector<CellSet>> columns);

  const WeakComposition& shape() const { return shape_; }
  int n() const { return static_cast<int>(shape_.size()); }
  int height(int col) const { return shape_[static_cast<std::size_t>(col - 1)]; }
  const CellSet& at(int col, int level) const {
    return columns_[static_cast<std::size_t>(col - 1)][static_cast<std::size_t>(level - 1)];
  }
  CellSet& at(int col, int level) { return columns_[static_cast<std::size_t>(col - 1)][static_cast<std::size_t>(level - 1)]; }
  const std::vector<std::vector<CellSet>>& columns() const { return columns_; }

  std::vector<int> weight() const;
  int excess() const;
  BetaPolynomial beta_weight() const;

  /// Columns separated by ";", levels bottom first separated by "|",
  /// e.g. "1|1;;3|2,3". Empty columns stay empty.
  std::string str() const;

  friend bool operator==(const SkylineTableau&, const SkylineTableau&) = default;
  friend auto operator<=>(const SkylineTableau&, const SkylineTableau&) = default;

 private:
  WeakComposition shape_;
  std::vector<std::vector<CellSet>> columns_;
};

SkylineTableau parse_skyline(const std::string& text);

/// Row, column, triple, free-entry and anchor conditions.
bool validate_skyline(const SkylineTableau& s);

/// All valid fillings of shape a (padded to n), sorted by str().
std::vector<SkylineTableau> enumerate_skyline(const WeakComposition& a, int n);

/// Sort each level's anchors, move free entries to the leftmost cell whose
/// anchor exceeds them, and read level l as tableau column s+1-l. The shape
/// must have one nonzero part size. Throws std::invalid_argument otherwise.
SetValuedTableau psi(const SkylineTableau& s);

/// The skyline of shape w.lambda that psi sends to t. Throws
/// std::invalid_argument when there is none (t outside the atom of w).
SkylineTableau psi_inverse(const SetValuedTableau& t, const Permutation& w);

}  // namespace kcrystal
