#include "kcrystal/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kcrystal/crystal.hpp"
#include "kcrystal/keys.hpp"
#include "kcrystal/kohnert.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/serialize.hpp"
#include "kcrystal/skyline.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

namespace {

// ---- enumeration of sweep parameters ----

struct Rect {
  int n;
  int r;
  int s;
  WeakComposition lambda;  // padded to n
  WeakComposition shape;   // nonzero parts
};

struct Shape {
  int n;
  WeakComposition lambda;
  WeakComposition shape;
};

Shape make_shape(int n, const WeakComposition& parts) {
  Shape sh{n, parts, parts};
  sh.lambda.resize(static_cast<std::size_t>(n), 0);
  return sh;
}

std::vector<int> n_range(const Bounds& b) {
  if (b.n) return {*b.n};
  std::vector<int> out;
  for (int n = 1; n <= b.max_n; ++n) out.push_back(n);
  return out;
}

WeakComposition trimmed(const WeakComposition& a) {
  WeakComposition out;
  for (int p : a)
    if (p > 0) out.push_back(p);
  return out;
}

bool is_rect(const WeakComposition& parts) {
  return !parts.empty() && std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });
}

void partitions_into(int total, int max_part, int max_rows, WeakComposition& cur, std::vector<WeakComposition>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(total - p, p, max_rows - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Shape> shapes(const Bounds& b) {
  std::vector<Shape> out;
  for (int n : n_range(b)) {
    if (b.shape) {
      const WeakComposition parts = trimmed(*b.shape);
      if (static_cast<int>(parts.size()) <= n) out.push_back(make_shape(n, parts));
      continue;
    }
    for (int cells = 1; cells <= b.max_cells; ++cells) {
      std::vector<WeakComposition> parts;
      WeakComposition cur;
      partitions_into(cells, cells, n, cur, parts);
      for (const auto& p : parts) out.push_back(make_shape(n, p));
    }
  }
  return out;
}

std::vector<Rect> rectangles(const Bounds& b) {
  std::vector<Rect> out;
  for (const auto& sh : shapes(b)) {
    if (!is_rect(sh.shape)) continue;
    const int r = static_cast<int>(sh.shape.size());
    const int s = sh.shape.front();
    if (!b.shape && (r > b.max_side || s > b.max_side)) continue;
    out.push_back({sh.n, r, s, sh.lambda, sh.shape});
  }
  if (!b.shape) {
    // Side bounds may admit rectangles with more cells than max_cells.
    for (int n : n_range(b))
      for (int r = 1; r <= std::min(n, b.max_side); ++r)
        for (int s = 1; s <= b.max_side; ++s) {
          if (r * s <= b.max_cells) continue;
          Rect rect{n, r, s, WeakComposition(static_cast<std::size_t>(n), 0), WeakComposition(static_cast<std::size_t>(r), s)};
          std::fill_n(rect.lambda.begin(), r, s);
          out.push_back(rect);
        }
    std::sort(out.begin(), out.end(), [](const Rect& x, const Rect& y) {
      return std::tie(x.n, x.r, x.s) < std::tie(y.n, y.r, y.s);
    });
  }
  return out;
}

std::string shape_label(int n, const WeakComposition& shape) {
  return "n=" + std::to_string(n) + " shape=" + composition_str(shape);
}

// ---- small helpers ----

std::vector<BetaPolynomial> monomial_basis(int n, int max_degree) {
  std::vector<BetaPolynomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.push_back(BetaPolynomial::monomial(n, e));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[static_cast<std::size_t>(k)] = d;
      rec(k + 1, left - d);
    }
    e[static_cast<std::size_t>(k)] = 0;
  };
  rec(0, max_degree);
  return out;
}

std::set<SetValuedTableau> as_set(const std::vector<SetValuedTableau>& v) { return {v.begin(), v.end()}; }

std::string first_difference(const std::set<SetValuedTableau>& got, const std::set<SetValuedTableau>& want) {
  for (const auto& t : got)
    if (!want.contains(t)) return "unexpected " + t.str();
  for (const auto& t : want)
    if (!got.contains(t)) return "missing " + t.str();
  return "";
}

std::string diff_text(const BetaPolynomial& got, const BetaPolynomial& want) { return "difference " + (got - want).str(); }

BetaPolynomial string_character(const IKString& s, int n) {
  BetaPolynomial ch(n);
  for (const auto& t : s.top) ch += t.beta_weight();
  for (const auto& t : s.bottom) ch += t.beta_weight();
  return ch;
}

std::vector<Permutation> coset_reps_below(const Permutation& w, const WeakComposition& lambda, int n) {
  std::vector<Permutation> out;
  for (const auto& v : coset_reps(lambda, n))
    if (bruhat_leq(v, w)) out.push_back(v);
  return out;
}

#define KC_CHECK(cond, why)                          \
  do {                                               \
    if (!(cond)) return CaseOutcome::fail(why);      \
  } while (false)

// ---- operator-algebra ----

using Op = BetaPolynomial (*)(const BetaPolynomial&, int);

struct NamedOp {
  const char* name;
  Op op;
};

const NamedOp kOps[] = {
    {"pi", demazure_pi},
    {"varpi", demazure_lascoux},
    {"isobaric-beta", isobaric_beta},
    {"grothendieck-step", grothendieck_step},
};

CaseOutcome check_operator(int n, int max_degree, const std::string& name, Op op) {
  const BetaPolynomial beta = BetaPolynomial::beta(n);
  for (const auto& m : monomial_basis(n, max_degree)) {
    for (int i = 1; i < n; ++i) {
      const BetaPolynomial once = op(m, i);
      const BetaPolynomial twice = op(once, i);
      BetaPolynomial expected = once;
      if (name == "isobaric-beta") expected = beta * once;
      if (name == "grothendieck-step") expected = -(beta * once);
      KC_CHECK(twice == expected, "quadratic relation fails for i=" + std::to_string(i) + " on " + m.str());
      if (i + 1 < n) {
        const BetaPolynomial lhs = op(op(op(m, i), i + 1), i);
        const BetaPolynomial rhs = op(op(op(m, i + 1), i), i + 1);
        KC_CHECK(lhs == rhs, "braid relation fails for i=" + std::to_string(i) + " on " + m.str());
      }
      for (int j = i + 2; j < n; ++j)
        KC_CHECK(op(op(m, i), j) == op(op(m, j), i),
                 "commutation fails for i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + m.str());
    }
  }
  return CaseOutcome::pass();
}

CaseOutcome check_lascoux_identities(const Shape& sh) {
  const int n = sh.n;
  const auto reps = coset_reps(sh.lambda, n);
  for (const auto& w : reps) {
    const WeakComposition a = act(w, sh.lambda);
    const BetaPolynomial full = lascoux(a, n);
    BetaPolynomial atoms(n);
    for (const auto& v : coset_reps_below(w, sh.lambda, n)) atoms += lascoux_atom(act(v, sh.lambda), n);
    KC_CHECK(full == atoms, "Bruhat sum of atoms differs at w=" + w.str() + ": " + diff_text(atoms, full));
    for (const auto& word : reduced_words(w))
      KC_CHECK(lascoux(a, n, word) == full, "lascoux depends on the reduced word at w=" + w.str());
    KC_CHECK(full.at_beta_zero() == key_polynomial(a, n), "beta=0 specialization is not the key polynomial at " +
                                                              composition_str(a));
  }
  const WeakComposition bottom(sh.lambda.rbegin(), sh.lambda.rend());
  const BetaPolynomial top = lascoux(bottom, n);
  for (int i = 1; i < n; ++i)
    KC_CHECK(swap_action(top, i) == top, "L_{w0 lambda} not symmetric under s_" + std::to_string(i));
  return CaseOutcome::pass();
}

std::vector<SuiteCase> operator_algebra(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (int n : n_range(b)) {
    if (n < 2) continue;
    for (const auto& op : kOps) {
      const std::string name = op.name;
      const Op f = op.op;
      const int deg = b.max_degree;
      out.push_back({"n=" + std::to_string(n) + " op=" + name, [=] { return check_operator(n, deg, name, f); }});
    }
  }
  for (const auto& sh : shapes(b))
    out.push_back({shape_label(sh.n, sh.shape) + " lascoux-identities", [=] { return check_lascoux_identities(sh); }});
  return out;
}

// ---- crystal-axioms ----

CaseOutcome check_crystal(const Shape& sh) {
  const int n = sh.n;
  const auto all = enumerate_svt(n, sh.shape);
  const std::set<SetValuedTableau> universe(all.begin(), all.end());
  for (const auto& t : all) {
    KC_CHECK(validate(t), "enumerated tableau fails validate: " + t.str());
    const auto wt = t.weight();
    for (int i = 1; i < n; ++i) {
      int phi = 0;
      for (auto cur = crystal_f(t, i); cur; cur = crystal_f(*cur, i)) ++phi;
      int eps = 0;
      for (auto cur = crystal_e(t, i); cur; cur = crystal_e(*cur, i)) ++eps;
      const int pairing = wt[static_cast<std::size_t>(i - 1)] - wt[static_cast<std::size_t>(i)];
      KC_CHECK(phi - eps == pairing, "phi - eps != <wt, alpha_i> at " + t.str() + " i=" + std::to_string(i));
      if (auto down = crystal_f(t, i)) {
        KC_CHECK(universe.contains(*down), "f_" + std::to_string(i) + " leaves the set at " + t.str());
        auto back = crystal_e(*down, i);
        KC_CHECK(back && *back == t, "e_i f_i != id at " + t.str() + " i=" + std::to_string(i));
        auto w2 = down->weight();
        KC_CHECK(w2[static_cast<std::size_t>(i - 1)] == wt[static_cast<std::size_t>(i - 1)] - 1 &&
                     w2[static_cast<std::size_t>(i)] == wt[static_cast<std::size_t>(i)] + 1,
                 "f_i does not lower the weight by alpha_i at " + t.str());
      }
      if (auto up = crystal_e(t, i)) {
        KC_CHECK(universe.contains(*up), "e_" + std::to_string(i) + " leaves the set at " + t.str());
        auto back = crystal_f(*up, i);
        KC_CHECK(back && *back == t, "f_i e_i != id at " + t.str() + " i=" + std::to_string(i));
      }
    }
  }
  for (const auto& comp : decompose(n, sh.shape)) {
    int highest = 0;
    for (const auto& t : comp.members) {
      bool top = true;
      for (int i = 1; i < n && top; ++i) top = !crystal_e(t, i);
      highest += top;
    }
    KC_CHECK(highest == 1, "component of " + comp.highest.str() + " has " + std::to_string(highest) + " highest elements");
    const auto mu = comp.highest.weight();
    KC_CHECK(is_partition(mu), "highest weight of " + comp.highest.str() + " is not dominant");
    BetaPolynomial schur(n);
    for (const auto& t : enumerate_ssyt(n, mu))
      schur += BetaPolynomial::monomial(n, t.weight(), comp.highest.excess());
    KC_CHECK(beta_character(comp.members, n) == schur, "component character of " + comp.highest.str() + " is not Schur");
  }
  return CaseOutcome::pass();
}

std::vector<SuiteCase> crystal_axioms(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& sh : shapes(b)) out.push_back({shape_label(sh.n, sh.shape), [=] { return check_crystal(sh); }});
  return out;
}

// ---- k-crystal-axioms ----

CaseOutcome check_k_crystal(const Rect& rc) {
  const int n = rc.n;
  const auto all = enumerate_svt(n, rc.shape);
  const auto u = SetValuedTableau::highest_weight(rc.shape, n);
  // a unique element killed by every e_i and e_i^K
  std::vector<SetValuedTableau> minimal;
  for (const auto& t : all) {
    bool top = true;
    for (int i = 1; i < n && top; ++i) top = !crystal_e(t, i) && !kcrystal_e(t, i);
    if (top) minimal.push_back(t);
  }
  KC_CHECK(minimal.size() == 1 && minimal.front() == u, "minimal highest weight element is not unique u");
  std::set<SetValuedTableau> reached{u};
  std::vector<SetValuedTableau> stack{u};
  while (!stack.empty()) {
    const auto t = stack.back();
    stack.pop_back();
    for (int i = 1; i < n; ++i)
      for (const auto& next : {crystal_f(t, i), kcrystal_f(t, i)})
        if (next && reached.insert(*next).second) stack.push_back(*next);
  }
  KC_CHECK(reached.size() == all.size(), "u does not generate svt (" + std::to_string(reached.size()) + " of " +
                                             std::to_string(all.size()) + ")");
  // e^K and f^K are mutually inverse; f^K f^K = 0.
  for (const auto& t : all) {
    for (int i = 1; i < n; ++i) {
      if (auto down = kcrystal_f(t, i)) {
        KC_CHECK(validate(*down), "f^K output invalid at " + t.str());
        auto back = kcrystal_e(*down, i);
        KC_CHECK(back && *back == t, "e^K f^K != id at " + t.str() + " i=" + std::to_string(i));
        KC_CHECK(!kcrystal_f(*down, i), "f^K f^K != 0 at " + t.str() + " i=" + std::to_string(i));
      }
      if (auto up = kcrystal_e(t, i)) {
        auto back = kcrystal_f(*up, i);
        KC_CHECK(back && *back == t, "f^K e^K != id at " + t.str() + " i=" + std::to_string(i));
      }
    }
  }
  // i-K-strings partition the set, with the expected shapes and characters.
  const auto reps = coset_reps(rc.lambda, n);
  std::vector<std::set<SetValuedTableau>> demazure;
  for (const auto& w : reps) demazure.push_back(as_set(demazure_subset(w, rc.shape, n)));
  for (int i = 1; i < n; ++i) {
    std::map<SetValuedTableau, int> seen;
    const auto strings = ik_strings(all, i);
    for (const auto& s : strings) {
      const std::string head = s.top.front().str();
      for (const auto& t : s.top) ++seen[t];
      for (const auto& t : s.bottom) ++seen[t];
      KC_CHECK(s.bottom.size() + 1 == s.top.size(), "string of " + head + " has rows of lengths " +
                                                         std::to_string(s.top.size()) + " and " +
                                                         std::to_string(s.bottom.size()));
      const BetaPolynomial expected = demazure_lascoux(s.top.front().beta_weight(), i);
      KC_CHECK(string_character(s, n) == expected, "string character differs from varpi_i at " + head);
      std::set<SetValuedTableau> members(s.top.begin(), s.top.end());
      members.insert(s.bottom.begin(), s.bottom.end());
      for (std::size_t k = 0; k < reps.size(); ++k) {
        std::set<SetValuedTableau> meet;
        for (const auto& t : members)
          if (demazure[k].contains(t)) meet.insert(t);
        const bool ok = meet.empty() || meet == members || (meet.size() == 1 && *meet.begin() == s.top.front());
        KC_CHECK(ok, "Demazure subset of " + reps[k].str() + " cuts the " + std::to_string(i) + "-K-string of " + head);
      }
    }
    KC_CHECK(seen.size() == all.size(), "strings for i=" + std::to_string(i) + " miss elements");
    for (const auto& [t, count] : seen)
      KC_CHECK(count == 1, t.str() + " lies on several " + std::to_string(i) + "-K-strings");
  }
  return CaseOutcome::pass();
}

std::vector<SuiteCase> k_crystal_axioms(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& rc : rectangles(b)) out.push_back({shape_label(rc.n, rc.shape), [=] { return check_k_crystal(rc); }});
  return out;
}

// ---- demazure-flag ----

CaseOutcome check_demazure_flag(const Rect& rc, const Permutation& w) {
  const int n = rc.n;
  const auto u = SetValuedTableau::highest_weight(rc.shape, n);
  const auto flagged = as_set(flagged_set(w, rc.shape, n));
  const BetaPolynomial expected = lascoux(act(w, rc.lambda), n);
  for (const auto& word : reduced_words(w)) {
    std::vector<SetValuedTableau> members;
    for (auto& t : enumerate_svt(n, rc.shape))
      if (in_demazure(t, word)) members.push_back(std::move(t));
    const auto got = as_set(members);
    std::string label = "word";
    for (int i : word) label += " " + std::to_string(i);
    KC_CHECK(got.contains(u), label + ": u missing");
    KC_CHECK(got == flagged, label + ": differs from the flagged set, " + first_difference(got, flagged));
    KC_CHECK(beta_character(members, n) == expected, label + ": character " + diff_text(beta_character(members, n), expected));
  }
  if (w == Permutation::longest(n))
    KC_CHECK(flagged.size() == enumerate_svt(n, rc.shape).size(), "B_{w0} is not everything");
  return CaseOutcome::pass();
}

std::vector<SuiteCase> demazure_flag(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& rc : rectangles(b))
    for (const auto& w : all_permutations(rc.n))
      out.push_back({shape_label(rc.n, rc.shape) + " w=" + w.str(), [=] { return check_demazure_flag(rc, w); }});
  return out;
}

// ---- character ----

CaseOutcome check_svt_sum(const Shape& sh) {
  const int n = sh.n;
  const WeakComposition bottom(sh.lambda.rbegin(), sh.lambda.rend());
  const BetaPolynomial got = beta_character(enumerate_svt(n, sh.shape), n);
  const BetaPolynomial want = lascoux(bottom, n);
  KC_CHECK(got == want, "svt character vs L_{w0 lambda}: " + diff_text(got, want));
  BetaPolynomial schur(n);
  for (const auto& t : enumerate_ssyt(n, sh.shape)) schur += t.beta_weight();
  KC_CHECK(key_polynomial(bottom, n) == schur, "key polynomial of w0 lambda is not the Schur polynomial");
  KC_CHECK(got.at_beta_zero() == schur, "beta=0 part of the svt character is not the Schur polynomial");
  return CaseOutcome::pass();
}

// The thirteen K-Kohnert diagrams of (0,2,2), transcribed column by column
// from a hand-drawn grid; marked boxes last.
std::set<KohnertDiagram> grid_022() {
  const std::vector<std::pair<std::set<Cell>, std::set<Cell>>> grid = {
      {{{2, 1}, {2, 2}, {3, 1}, {3, 2}}, {}},
      {{{1, 2}, {2, 1}, {3, 1}, {3, 2}}, {}},
      {{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}, {{2, 2}}},
      {{{1, 2}, {2, 1}, {2, 2}, {3, 1}}, {}},
      {{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}, {{3, 2}}},
      {{{1, 1}, {1, 2}, {3, 1}, {3, 2}}, {}},
      {{{1, 1}, {1, 2}, {2, 2}, {3, 1}}, {}},
      {{{1, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2}}, {{3, 2}}},
      {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}, {}},
      {{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}, {{3, 1}}},
      {{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}}, {{2, 1}}},
      {{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}, {{2, 1}}},
      {{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}, {{2, 1}, {3, 2}}},
  };
  std::set<KohnertDiagram> out;
  for (const auto& [boxes, marked] : grid) out.insert(KohnertDiagram{boxes, marked});
  return out;
}

CaseOutcome check_golden_022() {
  const auto grid = grid_022();
  KC_CHECK(grid.size() == 13, "grid transcription has duplicates");
  const auto diagrams = closure({0, 2, 2});
  KC_CHECK(diagrams == grid, "closure has " + std::to_string(diagrams.size()) + " diagrams and differs from the grid");
  BetaPolynomial want(3);
  for (const auto& d : grid) want += diagram_weight(d, 3);
  const BetaPolynomial got = lascoux({0, 2, 2}, 3);
  KC_CHECK(got == want, "lascoux vs grid weights: " + diff_text(got, want));
  for (int i = 1; i < 3; ++i) KC_CHECK(swap_action(got, i) == got, "L_{0,2,2} not symmetric");
  return CaseOutcome::pass();
}

std::vector<SuiteCase> character(const Bounds& b) {
  std::vector<SuiteCase> out{{"golden lascoux 0,2,2", check_golden_022}};
  for (const auto& sh : shapes(b)) out.push_back({shape_label(sh.n, sh.shape) + " svt-sum", [=] { return check_svt_sum(sh); }});
  return out;
}

// ---- kohnert-bijection ----

CaseOutcome check_kohnert(const Rect& rc, const Permutation& w) {
  const int n = rc.n;
  const WeakComposition a = act(w, rc.lambda);
  const auto diagrams = closure(a);
  const auto flagged = as_set(flagged_set(w, rc.shape, n));
  std::set<SetValuedTableau> image;
  BetaPolynomial ch(n);
  for (const auto& d : diagrams) {
    const SetValuedTableau t = phi(d, rc.r, rc.s, n);
    KC_CHECK(validate(t), "phi image not semistandard: " + t.str());
    KC_CHECK(t.beta_weight() == diagram_weight(d, n), "phi changes the weight of " + diagram_to_json(d).dump());
    KC_CHECK(phi_inverse(t) == d, "phi_inverse(phi(D)) != D for " + diagram_to_json(d).dump());
    KC_CHECK(image.insert(t).second, "phi not injective at " + t.str());
    ch += diagram_weight(d, n);
    for (const auto& m : all_moves(d)) {
      const auto moved = svt_kohnert_move(t, m.from.first, m.k_move);
      KC_CHECK(moved && *moved == phi(m.result, rc.r, rc.s, n),
               "moves do not intertwine at " + diagram_to_json(d).dump() + " x=" + std::to_string(m.from.first));
    }
  }
  KC_CHECK(image == flagged, "phi image differs from the flagged set, " + first_difference(image, flagged));
  KC_CHECK(ch == lascoux(a, n), "diagram character: " + diff_text(ch, lascoux(a, n)));
  // Tableau moves stay semistandard and inside the flagged set; each one
  // comes from a diagram move.
  for (const auto& t : flagged) {
    const KohnertDiagram d = phi_inverse(t);
    std::set<SetValuedTableau> from_diagram;
    for (const auto& m : all_moves(d)) from_diagram.insert(phi(m.result, rc.r, rc.s, n));
    std::set<SetValuedTableau> from_tableau;
    for (int x = 1; x <= n; ++x)
      for (bool k : {false, true})
        if (auto moved = svt_kohnert_move(t, x, k)) {
          KC_CHECK(validate(*moved), "tableau move leaves svt at " + t.str() + " x=" + std::to_string(x));
          from_tableau.insert(*moved);
        }
    KC_CHECK(from_tableau == from_diagram, "tableau moves and diagram moves differ at " + t.str());
  }
  return CaseOutcome::pass();
}

std::vector<SuiteCase> kohnert_bijection(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& rc : rectangles(b))
    for (const auto& w : coset_reps(rc.lambda, rc.n))
      out.push_back({shape_label(rc.n, rc.shape) + " w=" + w.str(), [=] { return check_kohnert(rc, w); }});
  return out;
}

// ---- skyline-bijection ----

CaseOutcome check_skyline(const Rect& rc, const Permutation& w) {
  const int n = rc.n;
  const WeakComposition a = act(w, rc.lambda);
  const auto skylines = enumerate_skyline(a, n);
  const auto atom = as_set(atom_subset(w, rc.shape, n));
  std::set<SetValuedTableau> image;
  BetaPolynomial ch(n);
  for (const auto& sk : skylines) {
    const SetValuedTableau t = psi(sk);
    KC_CHECK(validate(t), "psi image not semistandard: " + t.str());
    KC_CHECK(t.beta_weight() == sk.beta_weight(), "psi changes the weight of " + sk.str());
    KC_CHECK(image.insert(t).second, "psi not injective at " + t.str());
    KC_CHECK(psi_inverse(t, w) == sk, "psi_inverse(psi(S)) != S for " + sk.str());
    ch += sk.beta_weight();
  }
  KC_CHECK(image == atom, "psi image differs from the atom, " + first_difference(image, atom));
  KC_CHECK(ch == lascoux_atom(a, n), "skyline character: " + diff_text(ch, lascoux_atom(a, n)));
  BetaPolynomial ideal(n);
  for (const auto& v : coset_reps_below(w, rc.lambda, n))
    for (const auto& sk : enumerate_skyline(act(v, rc.lambda), n)) ideal += sk.beta_weight();
  KC_CHECK(ideal == lascoux(a, n), "skylines below w: " + diff_text(ideal, lascoux(a, n)));
  return CaseOutcome::pass();
}

std::vector<SuiteCase> skyline_bijection(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& rc : rectangles(b))
    for (const auto& w : coset_reps(rc.lambda, rc.n))
      out.push_back({shape_label(rc.n, rc.shape) + " w=" + w.str(), [=] { return check_skyline(rc, w); }});
  return out;
}

// ---- keys-rectangle ----

CaseOutcome check_keys(const Rect& rc) {
  const int n = rc.n;
  const auto all = enumerate_svt(n, rc.shape);
  std::vector<SetValuedTableau> calk;
  std::vector<SetValuedTableau> kk;
  for (const auto& t : all) {
    calk.push_back(calK(t));
    kk.push_back(K_key(t, Involution::kRectStar));
    const SetValuedTableau star = k_lusztig_star(t);
    KC_CHECK(k_lusztig_star(star) == t, "star is not an involution at " + t.str());
    auto wt = t.weight();
    std::reverse(wt.begin(), wt.end());
    KC_CHECK(star.weight() == wt, "star does not reverse the weight at " + t.str());
    for (int i = 1; i < n; ++i) {
      const auto lhs_e = crystal_e(star, i);
      const auto rhs_e = crystal_f(t, n - i);
      KC_CHECK(lhs_e.has_value() == rhs_e.has_value() && (!lhs_e || *lhs_e == k_lusztig_star(*rhs_e)),
               "e_i(T*) != (f_{n-i} T)* at " + t.str() + " i=" + std::to_string(i));
      const auto lhs_f = crystal_f(star, i);
      const auto rhs_f = crystal_e(t, n - i);
      KC_CHECK(lhs_f.has_value() == rhs_f.has_value() && (!lhs_f || *lhs_f == k_lusztig_star(*rhs_f)),
               "f_i(T*) != (e_{n-i} T)* at " + t.str() + " i=" + std::to_string(i));
    }
    if (rc.r == 1) KC_CHECK(star == lusztig_star(t), "single row: star and the Lusztig involution differ at " + t.str());
    if (t.has_singleton_cells()) {
      const auto key = right_key(t);
      KC_CHECK(is_key(key), "right key is not a key tableau at " + t.str());
      auto kw = key.weight();
      KC_CHECK(sort_descending(kw) == rc.lambda, "right key weight outside the orbit at " + t.str());
      KC_CHECK(lusztig_star(lusztig_star(t)) == t, "Lusztig involution is not an involution at " + t.str());
    }
  }
  for (const auto& w : coset_reps(rc.lambda, n)) {
    const WeakComposition a = act(w, rc.lambda);
    const auto target = key_of_composition(a);
    std::set<SetValuedTableau> ideal;
    std::set<SetValuedTableau> atom;
    BetaPolynomial k_ideal(n);
    BetaPolynomial k_atom(n);
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (preceq(calk[j], target)) ideal.insert(all[j]);
      if (calk[j] == target) atom.insert(all[j]);
      if (preceq(kk[j], target)) k_ideal += all[j].beta_weight();
      if (kk[j] == target) k_atom += all[j].beta_weight();
    }
    const auto dem = as_set(demazure_subset(w, rc.shape, n));
    const auto atm = as_set(atom_subset(w, rc.shape, n));
    KC_CHECK(ideal == dem, "w=" + w.str() + " calK ideal vs Demazure subset, " + first_difference(ideal, dem));
    KC_CHECK(atom == atm, "w=" + w.str() + " calK fibre vs atom subset, " + first_difference(atom, atm));
    KC_CHECK(k_ideal == lascoux(a, n), "w=" + w.str() + " K ideal character: " + diff_text(k_ideal, lascoux(a, n)));
    KC_CHECK(k_atom == lascoux_atom(a, n), "w=" + w.str() + " K fibre character: " + diff_text(k_atom, lascoux_atom(a, n)));
  }
  return CaseOutcome::pass();
}

std::vector<SuiteCase> keys_rectangle(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& rc : rectangles(b)) out.push_back({shape_label(rc.n, rc.shape), [=] { return check_keys(rc); }});
  return out;
}

// ---- grothendieck-vexillary ----

CaseOutcome check_grothendieck_golden(int m, std::vector<int> word, WeakComposition a) {
  const Permutation w = longest_times_word_ltr(m, word);
  a.resize(static_cast<std::size_t>(m), 0);
  KC_CHECK(lehmer_code(w) == a, "Lehmer code of " + w.str() + " is " + composition_str(lehmer_code(w)));
  const BetaPolynomial g = grothendieck(w);
  const BetaPolynomial l = lascoux(a, m);
  KC_CHECK(g == l, diff_text(g, l));
  return CaseOutcome::pass();
}

CaseOutcome check_vexillary(int m) {
  const int pattern[] = {2, 1, 4, 3};
  for (const auto& w : all_permutations(m)) {
    if (!avoids_pattern(w, pattern)) continue;
    const BetaPolynomial g = grothendieck(w);
    const BetaPolynomial l = lascoux(lehmer_code(w), m);
    KC_CHECK(g == l, "w=" + w.str() + ": " + diff_text(g, l));
    KC_CHECK(g.at_beta_zero() == key_polynomial(lehmer_code(w), m), "w=" + w.str() + ": Schubert vs key polynomial");
  }
  return CaseOutcome::pass();
}

std::vector<SuiteCase> grothendieck_vexillary(const Bounds& b) {
  std::vector<SuiteCase> out{
      {"golden s1s2(2,2) m=5", [] { return check_grothendieck_golden(5, {2, 1, 2, 4, 3, 4}, {0, 2, 2}); }},
      {"golden s2s1s3s2(2,2) m=6",
       [] { return check_grothendieck_golden(6, {3, 2, 1, 3, 2, 5, 4, 3, 5, 4, 5}, {0, 0, 2, 2}); }},
      {"golden s2(4,2) m=5", [] { return check_grothendieck_golden(5, {2, 4, 3, 4}, {4, 0, 2}); }},
  };
  for (int m = 1; m <= b.max_n + 1; ++m) out.push_back({"vexillary m=" + std::to_string(m), [=] { return check_vexillary(m); }});
  return out;
}

// ---- conjecture-scan ----

std::string orbit_report(const Shape& sh, bool kohnert) {
  std::ostringstream os;
  int mismatches = 0;
  for (const auto& w : coset_reps(sh.lambda, sh.n)) {
    const WeakComposition a = act(w, sh.lambda);
    BetaPolynomial got(sh.n);
    if (kohnert) {
      for (const auto& d : closure(a)) got += diagram_weight(d, sh.n);
    } else {
      for (const auto& s : enumerate_skyline(a, sh.n)) got += s.beta_weight();
    }
    const BetaPolynomial want = kohnert ? lascoux(a, sh.n) : lascoux_atom(a, sh.n);
    if (got != want) {
      ++mismatches;
      os << "; a=" << composition_str(a) << " " << diff_text(got, want);
    }
  }
  return (mismatches == 0 ? "all match" : std::to_string(mismatches) + " mismatch") + os.str();
}

std::string keys_report(const Shape& sh) {
  std::ostringstream os;
  int mismatches = 0;
  for (const auto& row : conjecture61_report(sh.shape, sh.n)) {
    if (row.match) continue;
    ++mismatches;
    os << "; map=" << (row.map == KeyMap::kCalK ? "calK" : "K");
    if (!row.involution.empty()) os << " involution=" << row.involution;
    os << " w=" << row.w.str() << " mode=" << (row.atom ? "atom" : "ideal") << " " << row.witness;
  }
  return (mismatches == 0 ? "all match" : std::to_string(mismatches) + " mismatch") + os.str();
}

std::vector<SuiteCase> conjecture_scan(const Bounds& b) {
  std::vector<SuiteCase> out;
  for (const auto& sh : shapes(b)) {
    if (!b.shape && is_rect(sh.shape)) continue;
    const std::string label = shape_label(sh.n, sh.shape);
    out.push_back({label + " kohnert", [=] { return CaseOutcome::report(orbit_report(sh, true)); }});
    out.push_back({label + " skyline", [=] { return CaseOutcome::report(orbit_report(sh, false)); }});
    out.push_back({label + " keys", [=] { return CaseOutcome::report(keys_report(sh)); }});
  }
  return out;
}

#undef KC_CHECK

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kReport:
      return "report";
  }
  return "fail";
}

std::vector<std::string> suite_names() {
  return {"operator-algebra", "crystal-axioms",  "k-crystal-axioms",       "demazure-flag",  "character",
          "kohnert-bijection", "skyline-bijection", "keys-rectangle", "grothendieck-vexillary", "conjecture-scan"};
}

std::vector<SuiteCase> suite_cases(const std::string& suite, const Bounds& b) {
  if (suite == "operator-algebra") return operator_algebra(b);
  if (suite == "crystal-axioms") return crystal_axioms(b);
  if (suite == "k-crystal-axioms") return k_crystal_axioms(b);
  if (suite == "demazure-flag") return demazure_flag(b);
  if (suite == "character") return character(b);
  if (suite == "kohnert-bijection") return kohnert_bijection(b);
  if (suite == "skyline-bijection") return skyline_bijection(b);
  if (suite == "keys-rectangle") return keys_rectangle(b);
  if (suite == "grothendieck-vexillary") return grothendieck_vexillary(b);
  if (suite == "conjecture-scan") return conjecture_scan(b);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<SuiteResult> run_cases(const std::string& suite, const std::vector<SuiteCase>& cases, int workers) {
  std::vector<SuiteResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      SuiteResult& res = results[k];
      res.suite = suite;
      res.case_name = cases[k].name;
      const auto start = std::chrono::steady_clock::now();
      try {
        CaseOutcome o = cases[k].run();
        res.status = o.status;
        res.witness = std::move(o.witness);
      } catch (const std::exception& e) {
        res.status = Status::kFail;
        res.witness = std::string("exception: ") + e.what();
      }
      res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(cases.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return results;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const Bounds& bounds, int workers) {
  return run_cases(suite, suite_cases(suite, bounds), workers);
}

int default_workers() {
  if (const char* env = std::getenv("KCRYSTAL_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace kcrystal
