#include "kcrystal/skyline.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kcrystal {

namespace {

struct RectOrbit {
  int r = 0;
  int s = 0;
  std::vector<int> cols;  // columns with a nonzero part, ascending
};

RectOrbit rect_orbit(const WeakComposition& a) {
  RectOrbit o;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (o.s != 0 && a[i] != o.s) throw std::invalid_argument("skyline shape has more than one nonzero part size");
    o.s = a[i];
    o.cols.push_back(static_cast<int>(i) + 1);
  }
  if (o.cols.empty()) throw std::invalid_argument("skyline shape is empty");
  o.r = static_cast<int>(o.cols.size());
  return o;
}

// Free entry f may sit in the cell (col, level): below its anchor and no
// smaller than the anchor of the cell above.
bool free_admissible(const SkylineTableau& s, int f, int col, int level) {
  if (f >= s.at(col, level).max()) return false;
  return level == s.height(col) || f >= s.at(col, level + 1).max();
}

bool triples_ok(const SkylineTableau& s, int left, int right) {
  const int hl = s.height(left);
  const int hr = s.height(right);
  auto ok = [](int a, int b, int c) { return c < a || b < c; };
  if (hr >= hl) {
    // C in the left column beside A; A above B in the right column.
    for (int level = 2; level <= hl; ++level)
      if (!ok(s.at(right, level).max(), s.at(right, level - 1).max(), s.at(left, level).max())) return false;
  } else {
    // A above B in the left column; C in the right column beside A.
    for (int level = 2; level <= hr; ++level)
      if (!ok(s.at(left, level).max(), s.at(left, level - 1).max(), s.at(right, level).max())) return false;
  }
  return true;
}

}  // namespace

SkylineTableau::SkylineTableau(WeakComposition shape, std::vector<std::vector<CellSet>> columns)
    : shape_(std::move(shape)), columns_(std::move(columns)) {
  if (columns_.size() != shape_.size()) throw std::invalid_argument("skyline: column count differs from shape length");
  for (std::size_t c = 0; c < shape_.size(); ++c) {
    if (static_cast<int>(columns_[c].size()) != shape_[c])
      throw std::invalid_argument("skyline: column height differs from shape");
    for (CellSet cell : columns_[c])
      if (cell.empty()) throw std::invalid_argument("skyline: empty cell");
  }
}

std::vector<int> SkylineTableau::weight() const {
  std::vector<int> wt(shape_.size(), 0);
  for (const auto& col : columns_)
    for (CellSet cell : col)
      for (int v : cell.values()) {
        if (v > n()) throw std::out_of_range("skyline entry exceeds n");
        ++wt[static_cast<std::size_t>(v - 1)];
      }
  return wt;
}

int SkylineTableau::excess() const {
  int e = 0;
  for (const auto& col : columns_)
    for (CellSet cell : col) e += cell.size() - 1;
  return e;
}

BetaPolynomial SkylineTableau::beta_weight() const { return BetaPolynomial::monomial(n(), weight(), excess()); }

std::string SkylineTableau::str() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ';';
    for (std::size_t l = 0; l < columns_[c].size(); ++l) {
      if (l) out += '|';
      out += columns_[c][l].str();
    }
  }
  return out;
}

SkylineTableau parse_skyline(const std::string& text) {
  WeakComposition shape;
  std::vector<std::vector<CellSet>> columns;
  std::string col_text;
  std::stringstream cols_in(text);
  // getline drops a trailing empty field, so count separators instead.
  const auto ncols = static_cast<std::size_t>(std::count(text.begin(), text.end(), ';')) + 1;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!std::getline(cols_in, col_text, ';')) col_text.clear();
    std::vector<CellSet> col;
    if (!col_text.empty()) {
      std::stringstream levels_in(col_text);
      std::string cell_text;
      while (std::getline(levels_in, cell_text, '|')) {
        CellSet cell;
        std::stringstream entries_in(cell_text);
        std::string entry;
        while (std::getline(entries_in, entry, ',')) {
          std::size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(entry, &used);
          } catch (const std::exception&) {
            throw std::invalid_argument("parse_skyline: bad entry '" + entry + "'");
          }
          if (used != entry.size() || v < 1 || v > kMaxEntry)
            throw std::invalid_argument("parse_skyline: bad entry '" + entry + "'");
          cell.insert(v);
        }
        if (cell.empty()) throw std::invalid_argument("parse_skyline: empty cell");
        col.push_back(cell);
      }
    }
    shape.push_back(static_cast<int>(col.size()));
    columns.push_back(std::move(col));
  }
  return SkylineTableau(std::move(shape), std::move(columns));
}

bool validate_skyline(const SkylineTableau& s) {
  const int n = s.n();
  int top = 0;
  for (int h : s.shape()) top = std::max(top, h);
  // no repeats within a level
  for (int level = 1; level <= top; ++level) {
    std::uint32_t seen = 0;
    for (int c = 1; c <= n; ++c) {
      if (s.height(c) < level) continue;
      const std::uint32_t bits = s.at(c, level).bits();
      if (seen & bits) return false;
      seen |= bits;
    }
  }
  // bottom anchor is the column index; columns decrease upward
  for (int c = 1; c <= n; ++c) {
    if (s.height(c) == 0) continue;
    if (s.at(c, 1).max() != c) return false;
    for (int level = 1; level < s.height(c); ++level)
      if (s.at(c, level).min() < s.at(c, level + 1).max()) return false;
  }
  // anchor triples
  for (int left = 1; left <= n; ++left)
    for (int right = left + 1; right <= n; ++right)
      if (!triples_ok(s, left, right)) return false;
  // free entries sit in the leftmost cell that admits them
  for (int c = 1; c <= n; ++c) {
    for (int level = 1; level <= s.height(c); ++level) {
      const CellSet cell = s.at(c, level);
      for (int f : cell.values()) {
        if (f == cell.max()) continue;
        for (int left = 1; left < c; ++left)
          if (s.height(left) >= level && free_admissible(s, f, left, level)) return false;
      }
    }
  }
  return true;
}

std::vector<SkylineTableau> enumerate_skyline(const WeakComposition& a, int n) {
  if (static_cast<int>(a.size()) > n) throw std::invalid_argument("enumerate_skyline: composition longer than n");
  WeakComposition shape = a;
  shape.resize(static_cast<std::size_t>(n), 0);
  if (std::any_of(shape.begin(), shape.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("enumerate_skyline: negative part");

  std::vector<std::pair<int, int>> order;  // (col, level), level-major
  int top = 0;
  for (int h : shape) top = std::max(top, h);
  for (int level = 1; level <= top; ++level)
    for (int c = 1; c <= n; ++c)
      if (shape[static_cast<std::size_t>(c - 1)] >= level) order.emplace_back(c, level);

  std::vector<std::vector<CellSet>> columns;
  for (int h : shape) columns.emplace_back(static_cast<std::size_t>(h));
  std::vector<std::uint32_t> used(static_cast<std::size_t>(top) + 1, 0);  // per level, no repeats
  std::vector<SkylineTableau> out;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      SkylineTableau s(shape, columns);
      if (validate_skyline(s)) out.push_back(std::move(s));
      return;
    }
    const auto [c, level] = order[k];
    auto& cell = columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(level - 1)];
    auto& level_used = used[static_cast<std::size_t>(level)];
    // Level 1 has anchor c; higher cells stay weakly below the cell underneath.
    const int hi = level == 1 ? c : columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(level - 2)].min();
    const std::uint32_t span = (std::uint32_t{1} << (hi + 1)) - 2;  // bits 1..hi
    for (std::uint32_t bits = span; bits != 0; bits = (bits - 1) & span) {
      const CellSet candidate = CellSet::from_bits(bits);
      if (level == 1 && candidate.max() != c) continue;
      if (level_used & bits) continue;
      cell = candidate;
      level_used |= bits;
      rec(k + 1);
      level_used &= ~bits;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const SkylineTableau& x, const SkylineTableau& y) { return x.str() < y.str(); });
  return out;
}

SetValuedTableau psi(const SkylineTableau& sk) {
  const RectOrbit o = rect_orbit(sk.shape());
  std::vector<std::vector<CellSet>> rows(static_cast<std::size_t>(o.r), std::vector<CellSet>(static_cast<std::size_t>(o.s)));
  for (int level = 1; level <= o.s; ++level) {
    std::vector<int> anchors;
    std::vector<int> frees;
    for (int c : o.cols) {
      const CellSet cell = sk.at(c, level);
      anchors.push_back(cell.max());
      for (int v : cell.values())
        if (v != cell.max()) frees.push_back(v);
    }
    std::sort(anchors.begin(), anchors.end());
    std::vector<CellSet> boxes;
    for (int v : anchors) boxes.push_back(CellSet::single(v));
    for (int f : frees) {
      auto it = std::find_if(anchors.begin(), anchors.end(), [&](int anchor) { return f < anchor; });
      boxes[static_cast<std::size_t>(it - anchors.begin())].insert(f);
    }
    const auto col = static_cast<std::size_t>(o.s - level);
    for (int k = 0; k < o.r; ++k) rows[static_cast<std::size_t>(k)][col] = boxes[static_cast<std::size_t>(k)];
  }
  return SetValuedTableau(std::move(rows), sk.n());
}

SkylineTableau psi_inverse(const SetValuedTableau& t, const Permutation& w) {
  if (t.num_rows() == 0 || !t.is_rectangle()) throw std::invalid_argument("psi_inverse: tableau must be a rectangle");
  const int n = t.n();
  if (w.size() != n) throw std::invalid_argument("psi_inverse: permutation size differs from n");
  WeakComposition lambda(static_cast<std::size_t>(n), 0);
  if (t.num_rows() > n) throw std::invalid_argument("psi_inverse: more rows than n");
  std::fill_n(lambda.begin(), t.num_rows(), t.num_cols());
  const WeakComposition a = act(w, lambda);
  const RectOrbit o = rect_orbit(a);

  std::vector<std::vector<CellSet>> columns;
  for (int h : a) columns.emplace_back(static_cast<std::size_t>(h));
  std::vector<SkylineTableau> found;

  // Each level's anchors are the maxima of one tableau column; try every
  // assignment of them to skyline columns, top level first, and place free
  // entries in the leftmost cell that admits them.
  std::function<void(int)> rec = [&](int level) {
    if (level == 0) {
      SkylineTableau sk(a, columns);
      if (validate_skyline(sk) && psi(sk) == t) found.push_back(std::move(sk));
      return;
    }
    const int tcol = o.s + 1 - level;
    std::vector<int> anchors;
    std::vector<int> frees;
    for (int row = 1; row <= o.r; ++row) {
      const CellSet box = t.at(row, tcol);
      anchors.push_back(box.max());
      for (int v : box.values())
        if (v != box.max()) frees.push_back(v);
    }
    std::sort(anchors.begin(), anchors.end());
    do {
      bool ok = true;
      for (int k = 0; k < o.r && ok; ++k) {
        const int c = o.cols[static_cast<std::size_t>(k)];
        const int anchor = anchors[static_cast<std::size_t>(k)];
        if (level == 1 && anchor != c) ok = false;
        columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(level - 1)] = CellSet::single(anchor);
      }
      for (std::size_t j = 0; j < frees.size() && ok; ++j) {
        const int f = frees[j];
        int home = 0;
        for (int c : o.cols) {
          const CellSet cell = columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(level - 1)];
          const bool below_anchor = f < cell.max();
          const bool fits_above =
              level == o.s || f >= columns[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(level)].max();
          if (below_anchor && fits_above) {
            home = c;
            break;
          }
        }
        if (home == 0) {
          ok = false;
        } else {
          columns[static_cast<std::size_t>(home - 1)][static_cast<std::size_t>(level - 1)].insert(f);
        }
      }
      for (int c : o.cols) {
        if (!ok || level == o.s) break;
        const auto& col = columns[static_cast<std::size_t>(c - 1)];
        if (col[static_cast<std::size_t>(level - 1)].min() < col[static_cast<std::size_t>(level)].max()) ok = false;
      }
      if (ok) rec(level - 1);
    } while (std::next_permutation(anchors.begin(), anchors.end()));
  };
  rec(o.s);

  if (found.empty()) throw std::invalid_argument("psi_inverse: " + t.str() + " is not in the atom of " + w.str());
  if (found.size() > 1) throw std::logic_error("psi_inverse: several preimages for " + t.str());
  return found.front();
}

}  // namespace kcrystal
