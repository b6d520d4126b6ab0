#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kcrystal/crystal.hpp"
#include "kcrystal/skyline.hpp"

using namespace kcrystal;

namespace {

SkylineTableau S(const std::string& s) { return parse_skyline(s); }

std::set<std::string> texts(const std::vector<SkylineTableau>& ss) {
  std::set<std::string> out;
  for (const auto& s : ss) out.insert(s.str());
  return out;
}

// No entry twice in a level; entries never exceed their column; cells weakly
// decrease going up a column (min below >= max above).
bool basic_rules_oracle(const SkylineTableau& s) {
  const int top = [&] {
    int h = 0;
    for (int c = 1; c <= s.n(); ++c) h = std::max(h, s.height(c));
    return h;
  }();
  for (int level = 1; level <= top; ++level) {
    std::set<int> seen;
    for (int c = 1; c <= s.n(); ++c) {
      if (s.height(c) < level) continue;
      for (int v : s.at(c, level).values()) {
        if (!seen.insert(v).second) return false;
        if (v > c) return false;
      }
      if (level > 1 && s.at(c, level - 1).min() < s.at(c, level).max()) return false;
    }
  }
  return true;
}

struct Pair {
  const char* skyline;
  const char* tableau;
};

// shape (2,0,2), n = 3
const std::vector<Pair>& s2_pairs() {
  static const std::vector<Pair> pairs = {
      {"1|1;;3|3", "1 1/3 3"},
      {"1|1;;3|2", "1 1/2 3"},
      {"1|1;;3|2,3", "1 1/2,3 3"},
      {"1|1;;2,3|2", "1 1/2 2,3"},
  };
  return pairs;
}

}  // namespace

TEST_CASE("parse and print") {
  const auto s = S("1|1;;2,3|2");
  CHECK(s.str() == "1|1;;2,3|2");
  CHECK(s.shape() == WeakComposition{2, 0, 2});
  CHECK(s.at(3, 1) == CellSet::of({2, 3}));
  CHECK(s.weight() == std::vector<int>{2, 2, 1});
  CHECK(s.excess() == 1);
  CHECK(s.beta_weight() == BetaPolynomial::monomial(3, {2, 2, 1}, 1));
  CHECK_THROWS(S("1|1;;3|,"));
}

TEST_CASE("validity conditions") {
  for (const auto& p : s2_pairs()) CHECK(validate_skyline(S(p.skyline)));
  // the anchor of a bottom cell is its column
  CHECK_FALSE(validate_skyline(S("1|1;;2|2")));
  // repeated entry in a level
  CHECK_FALSE(validate_skyline(S("1|1;;1,3|3")));
  // column must weakly decrease going up
  CHECK_FALSE(validate_skyline(S("1|1;;2,3|3")));
  // free entries sit in the leftmost admissible cell
  CHECK(validate_skyline(S(";1,2;3")));
  CHECK_FALSE(validate_skyline(S(";2;1,3")));
}

TEST_CASE("enumeration of small shapes") {
  CHECK(texts(enumerate_skyline({0, 1}, 2)) == std::set<std::string>{";2", ";1,2"});
  CHECK(texts(enumerate_skyline({1, 0}, 2)) == std::set<std::string>{"1;"});
  CHECK(enumerate_skyline({0, 0, 0}, 3).size() == 1);
  std::set<std::string> four;
  for (const auto& p : s2_pairs()) four.insert(p.skyline);
  CHECK(texts(enumerate_skyline({2, 0, 2}, 3)) == four);
  const auto all = enumerate_skyline({0, 2, 1}, 3);
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1].str() < all[k].str());
  for (const auto& s : all) CHECK(basic_rules_oracle(s));
}

TEST_CASE("psi on the s2 orbit of the square") {
  const Permutation s2({1, 3, 2});
  for (const auto& p : s2_pairs()) {
    CHECK(psi(S(p.skyline)).str() == p.tableau);
    CHECK(psi_inverse(parse_tableau(p.tableau, 3), s2).str() == p.skyline);
  }
  // outside the atom of s2
  CHECK_THROWS_AS(psi_inverse(parse_tableau("1 1/2 2", 3), s2), std::invalid_argument);
  CHECK_THROWS_AS(psi(S("1|1;2")), std::invalid_argument);
}

TEST_CASE("psi is a bijection onto atom subsets of rectangles") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= 2; ++s) {
        if (r * s > 6) continue;
        WeakComposition lambda(static_cast<std::size_t>(n), 0);
        std::fill_n(lambda.begin(), r, s);
        const WeakComposition shape(static_cast<std::size_t>(r), s);
        for (const auto& w : coset_reps(lambda, n)) {
          const auto a = act(w, lambda);
          const auto skylines = enumerate_skyline(a, n);
          std::set<std::string> image;
          BetaPolynomial sum(n);
          for (const auto& sk : skylines) {
            CHECK(basic_rules_oracle(sk));
            const auto t = psi(sk);
            CHECK(validate(t));
            CHECK(t.weight() == sk.weight());
            CHECK(psi_inverse(t, w) == sk);
            image.insert(t.str());
            sum += sk.beta_weight();
          }
          std::set<std::string> atom;
          for (const auto& t : atom_subset(w, shape, n)) atom.insert(t.str());
          CHECK(image == atom);
          CHECK(image.size() == skylines.size());
          CHECK(sum == lascoux_atom(a, n));
        }
      }
}
