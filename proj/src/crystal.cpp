#include "kcrystal/crystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kcrystal {

namespace {

void check_index(const SetValuedTableau& t, int i) {
  if (i < 1 || i >= t.n()) throw std::out_of_range("crystal operator index out of range");
}

struct Rectangle {
  int r;
  int s;
  WeakComposition lambda;  // padded to n
};

Rectangle require_rectangle(const WeakComposition& shape, int n) {
  WeakComposition parts;
  for (int p : shape)
    if (p > 0) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("shape must be a nonempty rectangle");
  if (!std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); }))
    throw std::invalid_argument("shape must be a rectangle");
  if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("rectangle has more rows than n");
  Rectangle rect{static_cast<int>(parts.size()), parts.front(), parts};
  rect.lambda.resize(static_cast<std::size_t>(n), 0);
  return rect;
}

}  // namespace

Signature signature(const SetValuedTableau& t, int i) {
  Signature sig;
  int open_minus = 0;
  for (int c = 1; c <= t.num_cols(); ++c) {
    const bool has_i = t.column_contains(c, i);
    const bool has_next = t.column_contains(c, i + 1);
    if (has_i && !has_next) {
      if (open_minus > 0) {
        --open_minus;
        sig.minus_cols.pop_back();
      } else {
        sig.plus_cols.push_back(c);
      }
    } else if (has_next && !has_i) {
      ++open_minus;
      sig.minus_cols.push_back(c);
    }
  }
  return sig;
}

std::optional<SetValuedTableau> crystal_f(const SetValuedTableau& t, int i) {
  check_index(t, i);
  const Signature sig = signature(t, i);
  if (sig.plus_cols.empty()) return std::nullopt;
  const int col = sig.plus_cols.back();
  const int row = t.row_in_column(col, i);
  SetValuedTableau out = t;
  if (col < t.row_length(row) && t.at(row, col + 1).contains(i)) {
    out.at(row, col + 1).erase(i);
    out.at(row, col).insert(i + 1);
  } else {
    out.at(row, col).erase(i);
    out.at(row, col).insert(i + 1);
  }
  return out;
}

std::optional<SetValuedTableau> crystal_e(const SetValuedTableau& t, int i) {
  check_index(t, i);
  const Signature sig = signature(t, i);
  if (sig.minus_cols.empty()) return std::nullopt;
  const int col = sig.minus_cols.front();
  const int row = t.row_in_column(col, i + 1);
  SetValuedTableau out = t;
  if (col > 1 && t.at(row, col - 1).contains(i + 1)) {
    out.at(row, col - 1).erase(i + 1);
    out.at(row, col).insert(i);
  } else {
    out.at(row, col).erase(i + 1);
    out.at(row, col).insert(i);
  }
  return out;
}

std::optional<SetValuedTableau> kcrystal_f(const SetValuedTableau& t, int i) {
  check_index(t, i);
  if (!t.contains(i)) return std::nullopt;
  const Signature sig = signature(t, i);
  if (!sig.minus_cols.empty() || sig.plus_cols.empty()) return std::nullopt;
  const int col = sig.plus_cols.back();
  const int row = t.row_in_column(col, i);
  for (int c = col; c <= t.num_cols(); ++c) {
    for (int r = 1; r <= t.col_height(c); ++r) {
      if (t.at(r, c).contains(i) && t.at(r, c).contains(i + 1)) return std::nullopt;
    }
  }
  SetValuedTableau out = t;
  out.at(row, col).insert(i + 1);
  return out;
}

std::optional<SetValuedTableau> kcrystal_e(const SetValuedTableau& t, int i) {
  check_index(t, i);
  const Signature sig = signature(t, i);
  if (!sig.minus_cols.empty()) return std::nullopt;
  int row = 0;
  int col = 0;
  for (int c = t.num_cols(); c >= 1 && col == 0; --c) {
    for (int r = 1; r <= t.col_height(c); ++r) {
      if (t.at(r, c).contains(i) && t.at(r, c).contains(i + 1)) {
        row = r;
        col = c;
        break;
      }
    }
  }
  if (col == 0) return std::nullopt;
  if (!sig.plus_cols.empty() && sig.plus_cols.back() > col) return std::nullopt;
  SetValuedTableau out = t;
  out.at(row, col).erase(i + 1);
  return out;
}

SetValuedTableau raise_max_classical(const SetValuedTableau& t, int i) {
  SetValuedTableau cur = t;
  while (auto up = crystal_e(cur, i)) cur = std::move(*up);
  return cur;
}

SetValuedTableau raise_max(const SetValuedTableau& t, int i) {
  SetValuedTableau cur = raise_max_classical(t, i);
  while (auto up = kcrystal_e(cur, i)) cur = std::move(*up);
  return cur;
}

bool in_demazure(const SetValuedTableau& t, const std::vector<int>& word) {
  SetValuedTableau cur = t;
  for (int i : word) cur = raise_max(cur, i);
  return cur == SetValuedTableau::highest_weight(t.shape(), t.n());
}

bool in_classical_demazure(const SetValuedTableau& t, const std::vector<int>& word) {
  SetValuedTableau cur = t;
  for (int i : word) cur = raise_max_classical(cur, i);
  return cur == SetValuedTableau::highest_weight(t.shape(), t.n());
}

std::vector<SetValuedTableau> demazure_subset(const Permutation& w, const WeakComposition& shape, int n) {
  const Rectangle rect = require_rectangle(shape, n);
  return demazure_subset(w, shape, n, reduced_word(stabilizer_min_rep(w, rect.lambda)));
}

std::vector<SetValuedTableau> demazure_subset(const Permutation& w, const WeakComposition& shape, int n,
                                              const std::vector<int>& word) {
  require_rectangle(shape, n);
  if (w.size() != n) throw std::invalid_argument("demazure_subset: permutation size differs from n");
  if (Permutation::from_word(n, word) != w || static_cast<int>(word.size()) != length(w))
    throw std::invalid_argument("demazure_subset: word is not a reduced word of " + w.str());
  std::vector<SetValuedTableau> out;
  for (auto& t : enumerate_svt(n, shape))
    if (in_demazure(t, word)) out.push_back(std::move(t));
  return out;
}

std::vector<SetValuedTableau> flagged_set(const Permutation& w, const WeakComposition& shape, int n) {
  const Rectangle rect = require_rectangle(shape, n);
  const std::vector<int> bounds = flag_vector(w, rect.r, rect.s);
  std::vector<SetValuedTableau> out;
  for (auto& t : enumerate_svt(n, shape)) {
    bool ok = true;
    for (int m = 1; m <= rect.r && ok; ++m)
      for (int c = 1; c <= rect.s && ok; ++c) ok = t.at(m, c).max() <= bounds[static_cast<std::size_t>(m - 1)];
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<SetValuedTableau> atom_subset(const Permutation& w, const WeakComposition& shape, int n) {
  const Rectangle rect = require_rectangle(shape, n);
  const Permutation top = stabilizer_min_rep(w, rect.lambda);
  std::set<SetValuedTableau> lower;
  for (const auto& v : coset_reps(rect.lambda, n)) {
    if (v == top || !bruhat_leq(v, top)) continue;
    for (auto& t : demazure_subset(v, shape, n)) lower.insert(std::move(t));
  }
  std::vector<SetValuedTableau> out;
  for (auto& t : demazure_subset(top, shape, n))
    if (!lower.contains(t)) out.push_back(std::move(t));
  return out;
}

BetaPolynomial beta_character(const std::vector<SetValuedTableau>& tableaux, int n) {
  BetaPolynomial ch(n);
  for (const auto& t : tableaux) ch += t.beta_weight();
  return ch;
}

std::vector<CrystalComponent> decompose(int n, const WeakComposition& shape) {
  const auto all = enumerate_svt(n, shape);
  std::map<SetValuedTableau, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  std::vector<int> label(all.size(), -1);
  std::vector<CrystalComponent> out;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.push_back({});
    std::vector<std::size_t> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      out.back().members.push_back(all[k]);
      for (int i = 1; i < n; ++i) {
        for (const auto& next : {crystal_f(all[k], i), crystal_e(all[k], i)}) {
          if (!next) continue;
          const std::size_t j = index.at(*next);
          if (label[j] < 0) {
            label[j] = id;
            stack.push_back(j);
          }
        }
      }
    }
    auto& comp = out.back();
    canonical_sort(comp.members);
    for (const auto& t : comp.members) {
      bool highest = true;
      for (int i = 1; i < n && highest; ++i) highest = !crystal_e(t, i).has_value();
      if (highest) {
        comp.highest = t;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CrystalComponent& a, const CrystalComponent& b) { return a.highest.str() < b.highest.str(); });
  return out;
}

std::vector<IKString> ik_strings(const std::vector<SetValuedTableau>& elements, int i) {
  std::vector<IKString> out;
  for (const auto& b : elements) {
    if (crystal_e(b, i) || kcrystal_e(b, i)) continue;
    IKString str;
    for (std::optional<SetValuedTableau> cur = b; cur; cur = crystal_f(*cur, i)) str.top.push_back(*cur);
    for (auto cur = kcrystal_f(b, i); cur; cur = crystal_f(*cur, i)) str.bottom.push_back(*cur);
    out.push_back(std::move(str));
  }
  return out;
}

std::vector<IKString> ik_strings(int n, const WeakComposition& shape, int i) {
  require_rectangle(shape, n);
  if (i < 1 || i >= n) throw std::out_of_range("ik_strings: index out of range");
  return ik_strings(enumerate_svt(n, shape), i);
}

}  // namespace kcrystal
