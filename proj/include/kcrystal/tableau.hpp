#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"

namespace kcrystal {

/// Largest entry bound a tableau cell can hold.
inline constexpr int kMaxEntry = 31;

/// A finite set of integers in [1, kMaxEntry], stored as a bit mask.
class CellSet {
 public:
  constexpr CellSet() = default;
  static constexpr CellSet single(int v) { return CellSet(bit(v)); }
  static CellSet of(std::initializer_list<int> values);
  static constexpr CellSet from_bits(std::uint32_t bits) { return CellSet(bits); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return v >= 1 && v <= kMaxEntry && (bits_ & bit(v)) != 0; }
  /// Undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 31 - std::countl_zero(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  void insert(int v) { bits_ |= bit(v); }
  void erase(int v) { bits_ &= ~bit(v); }

  std::vector<int> values() const;
  /// Entries ascending, comma separated.
  std::string str() const;

  friend constexpr bool operator==(CellSet, CellSet) = default;
  friend constexpr auto operator<=>(CellSet, CellSet) = default;

 private:
  constexpr explicit CellSet(std::uint32_t bits) : bits_(bits) {}
  static constexpr std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

  std::uint32_t bits_ = 0;
};

/// Filling of a Young diagram (English convention) by nonempty sets with
/// entries at most n. Rows and columns are 1-based in the accessors.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  /// Cells are given row by row; row lengths define the shape.
  SetValuedTableau(std::vector<std::vector<CellSet>> rows, int n);

  /// Highest weight filling: every box of row m holds {m}.
  static SetValuedTableau highest_weight(const WeakComposition& shape, int n);

  int n() const { return n_; }
  const WeakComposition& shape() const { return shape_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int row) const { return shape_[static_cast<std::size_t>(row - 1)]; }
  int num_cols() const { return rows_.empty() ? 0 : shape_[0]; }
  /// Number of boxes in a column.
  int col_height(int col) const;
  int num_boxes() const;
  bool is_rectangle() const;
  bool has_singleton_cells() const;

  const CellSet& at(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
  CellSet& at(int row, int col) { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
  const std::vector<std::vector<CellSet>>& rows() const { return rows_; }

  bool column_contains(int col, int v) const;
  /// Row of the box in the column holding v, or 0.
  int row_in_column(int col, int v) const;
  bool contains(int v) const;

  /// Occurrence counts c_1..c_n.
  std::vector<int> weight() const;
  int excess() const;
  BetaPolynomial beta_weight() const;

  /// "1 1,2/2,3 3": rows joined by '/', boxes by ' ', entries by ','.
  std::string str() const;

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
  friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

 private:
  int n_ = 0;
  WeakComposition shape_;
  std::vector<std::vector<CellSet>> rows_;
};

/// Inverse of SetValuedTableau::str(). Checks entry bounds and shape, not
/// semistandardness.
SetValuedTableau parse_tableau(const std::string& text, int n);

/// Semistandard set-valued conditions and the entry bound.
bool validate(const SetValuedTableau& t);

/// All semistandard set-valued tableaux of the given shape with entries at
/// most n, sorted by their text form.
std::vector<SetValuedTableau> enumerate_svt(int n, const WeakComposition& shape);

/// Semistandard (singleton) tableaux only.
std::vector<SetValuedTableau> enumerate_ssyt(int n, const WeakComposition& shape);

/// Sorts tableaux by their text form and drops duplicates.
void canonical_sort(std::vector<SetValuedTableau>& ts);

}  // namespace kcrystal
