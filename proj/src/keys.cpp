#include "kcrystal/keys.hpp"

#include <algorithm>
#include <stdexcept>

#include "kcrystal/crystal.hpp"

namespace kcrystal {

namespace {

SetValuedTableau map_boxes(const SetValuedTableau& t, CellSet (*pick)(CellSet)) {
  std::vector<std::vector<CellSet>> rows = t.rows();
  for (auto& row : rows)
    for (CellSet& box : row) box = pick(box);
  return SetValuedTableau(std::move(rows), t.n());
}

WeakComposition padded_shape(const SetValuedTableau& t) {
  WeakComposition lambda = t.shape();
  if (static_cast<int>(lambda.size()) > t.n()) throw std::invalid_argument("tableau has more rows than n");
  lambda.resize(static_cast<std::size_t>(t.n()), 0);
  return lambda;
}

}  // namespace

SetValuedTableau key_of_composition(const WeakComposition& a) {
  const int n = static_cast<int>(a.size());
  const int width = a.empty() ? 0 : *std::max_element(a.begin(), a.end());
  std::vector<std::vector<CellSet>> rows;
  for (int j = 1; j <= width; ++j) {
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      if (a[static_cast<std::size_t>(i - 1)] < j) continue;
      if (static_cast<int>(rows.size()) <= k) rows.emplace_back();
      rows[static_cast<std::size_t>(k)].push_back(CellSet::single(i));
      ++k;
    }
  }
  return SetValuedTableau(std::move(rows), n);
}

bool is_key(const SetValuedTableau& t) {
  if (!t.has_singleton_cells() || !validate(t)) return false;
  for (int c = 2; c <= t.num_cols(); ++c)
    for (int r = 1; r <= t.col_height(c); ++r)
      if (!t.column_contains(c - 1, t.at(r, c).min())) return false;
  return true;
}

SetValuedTableau right_key(const SetValuedTableau& t) {
  if (!t.has_singleton_cells() || !validate(t)) throw std::invalid_argument("right_key: need a semistandard tableau");
  const WeakComposition lambda = padded_shape(t);
  std::vector<Permutation> holders;
  for (const auto& v : coset_reps(lambda, t.n()))
    if (in_classical_demazure(t, reduced_word(v))) holders.push_back(v);
  std::vector<Permutation> minimal;
  for (const auto& v : holders) {
    const bool is_min = std::none_of(holders.begin(), holders.end(),
                                     [&](const Permutation& u) { return u != v && bruhat_leq(u, v); });
    if (is_min) minimal.push_back(v);
  }
  if (minimal.size() != 1) throw std::logic_error("right_key: no unique minimal Demazure crystal for " + t.str());
  return key_of_composition(act(minimal.front(), lambda));
}

SetValuedTableau max_tableau(const SetValuedTableau& t) {
  return map_boxes(t, [](CellSet b) { return CellSet::single(b.max()); });
}

SetValuedTableau min_tableau(const SetValuedTableau& t) {
  return map_boxes(t, [](CellSet b) { return CellSet::single(b.min()); });
}

SetValuedTableau calK(const SetValuedTableau& t) { return right_key(max_tableau(t)); }

SetValuedTableau lusztig_star(const SetValuedTableau& t) {
  const int n = t.n();
  std::vector<int> path;
  SetValuedTableau cur = t;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (auto up = crystal_e(cur, i)) {
        cur = std::move(*up);
        path.push_back(i);
        moved = true;
        break;
      }
    }
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (auto down = crystal_f(cur, i)) {
        cur = std::move(*down);
        moved = true;
        break;
      }
    }
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto up = crystal_e(cur, n - *it);
    if (!up) throw std::logic_error("lusztig_star: mirrored path breaks at " + cur.str());
    cur = std::move(*up);
  }
  return cur;
}

SetValuedTableau k_lusztig_star(const SetValuedTableau& t) {
  if (t.num_rows() == 0 || !t.is_rectangle()) throw std::invalid_argument("k_lusztig_star: tableau must be a rectangle");
  const int r = t.num_rows();
  const int s = t.num_cols();
  const int n = t.n();
  std::vector<std::vector<CellSet>> rows(static_cast<std::size_t>(r), std::vector<CellSet>(static_cast<std::size_t>(s)));
  for (int row = 1; row <= r; ++row) {
    for (int col = 1; col <= s; ++col) {
      CellSet box;
      for (int v : t.at(r + 1 - row, s + 1 - col).values()) box.insert(n + 1 - v);
      rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = box;
    }
  }
  return SetValuedTableau(std::move(rows), n);
}

std::string to_string(Involution inv) { return inv == Involution::kNaiveStar ? "naive-star" : "rect-star"; }

Involution parse_involution(const std::string& name) {
  if (name == "naive-star") return Involution::kNaiveStar;
  if (name == "rect-star") return Involution::kRectStar;
  throw std::invalid_argument("unknown involution '" + name + "'");
}

SetValuedTableau K_key(const SetValuedTableau& t, Involution inv) {
  const SetValuedTableau dagger = inv == Involution::kNaiveStar ? lusztig_star(t) : k_lusztig_star(t);
  return right_key(lusztig_star(min_tableau(dagger)));
}

bool preceq(const SetValuedTableau& lhs, const SetValuedTableau& rhs) {
  if (lhs.shape() != rhs.shape()) throw std::invalid_argument("preceq: shapes differ");
  for (int r = 1; r <= lhs.num_rows(); ++r)
    for (int c = 1; c <= lhs.row_length(r); ++c)
      if (lhs.at(r, c).min() > rhs.at(r, c).min()) return false;
  return true;
}

std::vector<Conjecture61Row> conjecture61_report(const WeakComposition& lambda_in, int n) {
  WeakComposition parts;
  for (int p : lambda_in)
    if (p > 0) parts.push_back(p);
  if (!is_partition(parts)) throw std::invalid_argument("conjecture61_report: shape must be a partition");
  if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("conjecture61_report: more rows than n");
  WeakComposition lambda = parts;
  lambda.resize(static_cast<std::size_t>(n), 0);
  const bool rectangle = std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });

  const auto tableaux = enumerate_svt(n, parts);
  struct Variant {
    KeyMap map;
    std::string involution;
    std::vector<SetValuedTableau> keys;
  };
  std::vector<Variant> variants;
  auto add_variant = [&](KeyMap map, std::string involution, auto key_of) {
    Variant v{map, std::move(involution), {}};
    for (const auto& t : tableaux) v.keys.push_back(key_of(t));
    variants.push_back(std::move(v));
  };
  add_variant(KeyMap::kCalK, "", [](const SetValuedTableau& t) { return calK(t); });
  add_variant(KeyMap::kK, to_string(Involution::kNaiveStar),
              [](const SetValuedTableau& t) { return K_key(t, Involution::kNaiveStar); });
  if (rectangle)
    add_variant(KeyMap::kK, to_string(Involution::kRectStar),
                [](const SetValuedTableau& t) { return K_key(t, Involution::kRectStar); });

  std::vector<Conjecture61Row> out;
  for (const auto& w : coset_reps(lambda, n)) {
    const WeakComposition a = act(w, lambda);
    const SetValuedTableau target = key_of_composition(a);
    const BetaPolynomial full = lascoux(a, n);
    const BetaPolynomial atom = lascoux_atom(a, n);
    for (const auto& v : variants) {
      BetaPolynomial ideal_ch(n);
      BetaPolynomial atom_ch(n);
      for (std::size_t k = 0; k < tableaux.size(); ++k) {
        if (preceq(v.keys[k], target)) ideal_ch += tableaux[k].beta_weight();
        if (v.keys[k] == target) atom_ch += tableaux[k].beta_weight();
      }
      for (bool is_atom : {false, true}) {
        const BetaPolynomial diff = is_atom ? atom_ch - atom : ideal_ch - full;
        Conjecture61Row row{parts, w, v.map, v.involution, is_atom, diff.is_zero(), ""};
        if (!row.match) row.witness = diff.str();
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

}  // namespace kcrystal
