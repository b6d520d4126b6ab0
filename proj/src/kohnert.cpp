#include "kcrystal/kohnert.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace kcrystal {

bool KohnertDiagram::valid() const {
  for (const auto& [x, y] : boxes)
    if (x < 1 || y < 1) return false;
  return std::includes(boxes.begin(), boxes.end(), marked.begin(), marked.end());
}

KohnertDiagram initial_diagram(const WeakComposition& a) {
  KohnertDiagram d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("initial_diagram: negative part");
    for (int y = 1; y <= a[i]; ++y) d.boxes.emplace(static_cast<int>(i) + 1, y);
  }
  return d;
}

std::vector<KohnertMove> all_moves(const KohnertDiagram& d) {
  std::map<int, int> top;
  for (const auto& [x, y] : d.boxes) top[x] = std::max(top[x], y);
  std::vector<KohnertMove> out;
  for (const auto& [x, y] : top) {
    if (d.is_marked({x, y})) continue;
    int target = 0;
    for (int t = x - 1; t >= 1; --t) {
      if (!d.boxes.contains({t, y})) {
        target = t;
        break;
      }
      if (d.is_marked({t, y})) break;
    }
    if (target == 0) continue;

    KohnertMove plain{{x, y}, target, false, d};
    plain.result.boxes.erase({x, y});
    plain.result.boxes.emplace(target, y);
    out.push_back(std::move(plain));

    KohnertMove k{{x, y}, target, true, d};
    k.result.boxes.emplace(target, y);
    k.result.marked.emplace(x, y);
    out.push_back(std::move(k));
  }
  return out;
}

std::set<KohnertDiagram> kohnert_moves(const KohnertDiagram& d) {
  std::set<KohnertDiagram> out;
  for (auto& m : all_moves(d))
    if (!m.k_move) out.insert(std::move(m.result));
  return out;
}

std::set<KohnertDiagram> k_kohnert_moves(const KohnertDiagram& d) {
  std::set<KohnertDiagram> out;
  for (auto& m : all_moves(d))
    if (m.k_move) out.insert(std::move(m.result));
  return out;
}

std::set<KohnertDiagram> closure(const WeakComposition& a) {
  std::set<KohnertDiagram> seen{initial_diagram(a)};
  std::deque<KohnertDiagram> frontier{*seen.begin()};
  while (!frontier.empty()) {
    const KohnertDiagram d = std::move(frontier.front());
    frontier.pop_front();
    for (auto& m : all_moves(d))
      if (seen.insert(m.result).second) frontier.push_back(std::move(m.result));
  }
  return seen;
}

BetaPolynomial diagram_weight(const KohnertDiagram& d, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (const auto& [x, y] : d.boxes) {
    if (x > n) throw std::out_of_range("diagram_weight: box beyond column n");
    ++counts[static_cast<std::size_t>(x - 1)];
  }
  return BetaPolynomial::monomial(n, counts, static_cast<int>(d.marked.size()));
}

SetValuedTableau phi(const KohnertDiagram& d, int r, int s, int n) {
  if (r < 1 || s < 1) throw std::invalid_argument("phi: rectangle sides must be positive");
  std::vector<std::vector<int>> unmarked(static_cast<std::size_t>(s) + 1);
  for (const auto& [x, y] : d.boxes) {
    if (y > s) throw std::invalid_argument("phi: box above row s");
    if (x > n) throw std::invalid_argument("phi: box beyond column n");
    if (!d.is_marked({x, y})) unmarked[static_cast<std::size_t>(y)].push_back(x);
  }
  std::vector<std::vector<CellSet>> rows(static_cast<std::size_t>(r), std::vector<CellSet>(static_cast<std::size_t>(s)));
  for (int y = 1; y <= s; ++y) {
    const auto& xs = unmarked[static_cast<std::size_t>(y)];  // ascending, from the ordered set
    if (static_cast<int>(xs.size()) != r)
      throw std::invalid_argument("phi: row " + std::to_string(y) + " does not hold exactly r unmarked boxes");
    const auto col = static_cast<std::size_t>(s - y);
    for (int k = 0; k < r; ++k) rows[static_cast<std::size_t>(k)][col].insert(xs[static_cast<std::size_t>(k)]);
  }
  for (const auto& [x, y] : d.marked) {
    const auto& xs = unmarked[static_cast<std::size_t>(y)];
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) throw std::invalid_argument("phi: marked box with no unmarked box to its left");
    const auto k = static_cast<std::size_t>(it - xs.begin() - 1);
    rows[k][static_cast<std::size_t>(s - y)].insert(x);
  }
  return SetValuedTableau(std::move(rows), n);
}

KohnertDiagram phi_inverse(const SetValuedTableau& t) {
  if (t.num_rows() == 0 || !t.is_rectangle()) throw std::invalid_argument("phi_inverse: tableau must be a rectangle");
  const int s = t.num_cols();
  KohnertDiagram d;
  for (int c = 1; c <= s; ++c) {
    const int y = s + 1 - c;
    for (int row = 1; row <= t.num_rows(); ++row) {
      const CellSet box = t.at(row, c);
      for (int v : box.values()) {
        d.boxes.emplace(v, y);
        if (v != box.min()) d.marked.emplace(v, y);
      }
    }
  }
  return d;
}

std::optional<SetValuedTableau> svt_kohnert_move(const SetValuedTableau& t, int x, bool k_variant) {
  int col = 0;
  for (int c = 1; c <= t.num_cols() && col == 0; ++c)
    if (t.column_contains(c, x)) col = c;
  if (col == 0) return std::nullopt;
  const int row_b = t.row_in_column(col, x);
  if (t.at(row_b, col).min() != x) return std::nullopt;
  int lo = x - 1;  // x' in the tableau move
  while (lo >= 1 && t.column_contains(col, lo)) --lo;
  if (lo == 0) return std::nullopt;
  for (int v = lo + 1; v < x; ++v)
    if (t.at(t.row_in_column(col, v), col).size() != 1) return std::nullopt;

  SetValuedTableau out = t;
  for (int v = lo + 1; v < x; ++v) out.at(t.row_in_column(col, v), col) = CellSet::single(v - 1);
  if (!k_variant) out.at(row_b, col).erase(x);
  out.at(row_b, col).insert(x - 1);
  return out;
}

}  // namespace kcrystal
