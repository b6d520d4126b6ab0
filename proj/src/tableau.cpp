#include "kcrystal/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kcrystal {

CellSet CellSet::of(std::initializer_list<int> values) {
  CellSet s;
  for (int v : values) {
    if (v < 1 || v > kMaxEntry) throw std::out_of_range("cell entry out of range");
    s.insert(v);
  }
  return s;
}

std::vector<int> CellSet::values() const {
  std::vector<int> out;
  for (int v = 1; v <= kMaxEntry; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string CellSet::str() const {
  std::string out;
  for (int v : values()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

SetValuedTableau::SetValuedTableau(std::vector<std::vector<CellSet>> rows, int n) : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kMaxEntry) throw std::out_of_range("entry bound out of range");
  for (const auto& row : rows_) {
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    shape_.push_back(static_cast<int>(row.size()));
  }
  if (!is_partition(shape_)) throw std::invalid_argument("tableau shape is not a partition");
}

SetValuedTableau SetValuedTableau::highest_weight(const WeakComposition& shape, int n) {
  std::vector<std::vector<CellSet>> rows;
  for (std::size_t m = 0; m < shape.size(); ++m) {
    if (shape[m] == 0) break;
    rows.emplace_back(static_cast<std::size_t>(shape[m]), CellSet::single(static_cast<int>(m) + 1));
  }
  return SetValuedTableau(std::move(rows), n);
}

int SetValuedTableau::col_height(int col) const {
  int h = 0;
  for (int len : shape_)
    if (len >= col) ++h;
  return h;
}

int SetValuedTableau::num_boxes() const {
  int total = 0;
  for (int len : shape_) total += len;
  return total;
}

bool SetValuedTableau::is_rectangle() const {
  return std::all_of(shape_.begin(), shape_.end(), [&](int len) { return len == shape_.front(); });
}

bool SetValuedTableau::has_singleton_cells() const {
  for (const auto& row : rows_)
    for (CellSet c : row)
      if (c.size() != 1) return false;
  return true;
}

bool SetValuedTableau::column_contains(int col, int v) const { return row_in_column(col, v) != 0; }

int SetValuedTableau::row_in_column(int col, int v) const {
  for (int r = 1; r <= col_height(col); ++r)
    if (at(r, col).contains(v)) return r;
  return 0;
}

bool SetValuedTableau::contains(int v) const {
  for (const auto& row : rows_)
    for (CellSet c : row)
      if (c.contains(v)) return true;
  return false;
}

std::vector<int> SetValuedTableau::weight() const {
  std::vector<int> wt(static_cast<std::size_t>(n_), 0);
  for (const auto& row : rows_)
    for (CellSet c : row)
      for (int v : c.values()) {
        if (v > n_) throw std::out_of_range("entry exceeds n");
        ++wt[static_cast<std::size_t>(v - 1)];
      }
  return wt;
}

int SetValuedTableau::excess() const {
  int e = 0;
  for (const auto& row : rows_)
    for (CellSet c : row) e += c.size() - 1;
  return e;
}

BetaPolynomial SetValuedTableau::beta_weight() const { return BetaPolynomial::monomial(n_, weight(), excess()); }

std::string SetValuedTableau::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ' ';
      out += rows_[r][c].str();
    }
  }
  return out;
}

SetValuedTableau parse_tableau(const std::string& text, int n) {
  std::vector<std::vector<CellSet>> rows;
  std::stringstream rows_in(text);
  std::string row_text;
  while (std::getline(rows_in, row_text, '/')) {
    std::vector<CellSet> row;
    std::stringstream boxes_in(row_text);
    std::string box_text;
    while (boxes_in >> box_text) {
      CellSet box;
      std::stringstream entries_in(box_text);
      std::string entry;
      while (std::getline(entries_in, entry, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(entry, &used);
        } catch (const std::exception&) {
          throw std::invalid_argument("parse_tableau: bad entry '" + entry + "'");
        }
        if (used != entry.size()) throw std::invalid_argument("parse_tableau: bad entry '" + entry + "'");
        if (v < 1 || v > n) throw std::invalid_argument("parse_tableau: entry " + entry + " outside [1, n]");
        if (box.contains(v)) throw std::invalid_argument("parse_tableau: repeated entry in a box");
        box.insert(v);
      }
      if (box.empty()) throw std::invalid_argument("parse_tableau: empty box");
      row.push_back(box);
    }
    rows.push_back(std::move(row));
  }
  return SetValuedTableau(std::move(rows), n);
}

bool validate(const SetValuedTableau& t) {
  for (int r = 1; r <= t.num_rows(); ++r) {
    for (int c = 1; c <= t.row_length(r); ++c) {
      const CellSet box = t.at(r, c);
      if (box.empty() || box.max() > t.n()) return false;
      if (c > 1 && t.at(r, c - 1).max() > box.min()) return false;
      if (r > 1 && t.at(r - 1, c).max() >= box.min()) return false;
    }
  }
  return true;
}

namespace {

template <typename CellChoices>
std::vector<SetValuedTableau> fill_shape(int n, const WeakComposition& shape, CellChoices choices) {
  WeakComposition parts;
  for (int p : shape)
    if (p > 0) parts.push_back(p);
  if (!is_partition(parts)) throw std::invalid_argument("enumerate: shape must be a partition");
  std::vector<SetValuedTableau> out;
  if (static_cast<int>(parts.size()) > n) return out;
  std::vector<std::vector<CellSet>> rows;
  for (int p : parts) rows.emplace_back(static_cast<std::size_t>(p));
  const int nrows = static_cast<int>(parts.size());
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) {
      out.emplace_back(rows, n);
      return;
    }
    if (c == parts[static_cast<std::size_t>(r)]) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)].max());
    if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)].max() + 1);
    for (CellSet box : choices(lo, n)) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = box;
      rec(r, c + 1);
    }
  };
  rec(0, 0);
  canonical_sort(out);
  return out;
}

std::vector<CellSet> subsets_between(int lo, int hi) {
  std::vector<CellSet> out;
  if (lo > hi) return out;
  const int width = hi - lo + 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << width); ++mask) out.push_back(CellSet::from_bits(mask << lo));
  return out;
}

std::vector<CellSet> singletons_between(int lo, int hi) {
  std::vector<CellSet> out;
  for (int v = lo; v <= hi; ++v) out.push_back(CellSet::single(v));
  return out;
}

}  // namespace

std::vector<SetValuedTableau> enumerate_svt(int n, const WeakComposition& shape) { return fill_shape(n, shape, subsets_between); }

std::vector<SetValuedTableau> enumerate_ssyt(int n, const WeakComposition& shape) {
  return fill_shape(n, shape, singletons_between);
}

void canonical_sort(std::vector<SetValuedTableau>& ts) {
  std::vector<std::pair<std::string, SetValuedTableau>> keyed;
  keyed.reserve(ts.size());
  for (auto& t : ts) keyed.emplace_back(t.str(), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  ts.clear();
  for (auto& [key, t] : keyed) ts.push_back(std::move(t));
}

}  // namespace kcrystal
