#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kcrystal/permutation.hpp"

using namespace kcrystal;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

int inversions_oracle(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) inv += w(i) > w(j);
  return inv;
}

// Every word of length l(w) over {1..n-1} that evaluates to w.
std::set<std::vector<int>> reduced_words_oracle(const Permutation& w) {
  const int n = w.size();
  const int l = inversions_oracle(w);
  std::set<std::vector<int>> out;
  std::vector<int> word(static_cast<std::size_t>(l));
  std::function<void(int)> rec = [&](int k) {
    if (k == l) {
      if (Permutation::from_word(n, word) == w) out.insert(word);
      return;
    }
    for (int i = 1; i < n; ++i) {
      word[static_cast<std::size_t>(k)] = i;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// v <= w iff some subword of some reduced word of w evaluates to v.
bool bruhat_oracle(const Permutation& v, const Permutation& w) {
  const int n = w.size();
  for (const auto& word : reduced_words_oracle(w)) {
    const std::size_t l = word.size();
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < l; ++k)
        if (mask & (1u << k)) sub.push_back(word[k]);
      if (Permutation::from_word(n, sub) == v) return true;
    }
  }
  return false;
}

// Coset w * Stab(lambda) by brute force, minimal-length element.
Permutation min_rep_oracle(const Permutation& w, const WeakComposition& lambda) {
  const int n = w.size();
  Permutation best = w;
  for (const auto& u : all_permutations(n)) {
    bool stabilizes = true;
    for (int i = 1; i <= n; ++i) stabilizes = stabilizes && lambda[static_cast<std::size_t>(u(i) - 1)] == lambda[static_cast<std::size_t>(i - 1)];
    if (!stabilizes) continue;
    const Permutation cand = w * u;
    if (inversions_oracle(cand) < inversions_oracle(best)) best = cand;
  }
  return best;
}

}  // namespace

TEST_CASE("length counts inversions") {
  CHECK(length(P({1, 2, 3})) == 0);
  CHECK(length(P({3, 2, 1})) == 3);
  CHECK(length(P({2, 3, 1})) == 2);
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) CHECK(length(w) == inversions_oracle(w));
}

TEST_CASE("reduced words") {
  using W = std::vector<std::vector<int>>;
  CHECK(reduced_words(P({2, 1, 3})) == W{{1}});
  CHECK(reduced_words(P({2, 3, 1})) == W{{1, 2}});
  auto w0 = reduced_words(P({3, 2, 1}));
  std::sort(w0.begin(), w0.end());
  CHECK(w0 == W{{1, 2, 1}, {2, 1, 2}});
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto got = reduced_words(w);
      CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == reduced_words_oracle(w));
      CHECK(reduced_word(w) == *reduced_words_oracle(w).begin());
    }
}

TEST_CASE("from_word composes right to left") {
  // s1 * s2: position swap of s2 first, then s1.
  CHECK(Permutation::from_word(3, std::vector<int>{1, 2}) == P({2, 3, 1}));
  CHECK(Permutation::from_word(3, std::vector<int>{2, 1}) == P({3, 1, 2}));
  CHECK(P({2, 3, 1}) * P({2, 3, 1}) == P({3, 1, 2}));
  CHECK(P({2, 3, 1}).inverse() == P({3, 1, 2}));
  CHECK(Permutation::longest(4) == P({4, 3, 2, 1}));
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(Permutation::identity(3), P({2, 3, 1})));
  CHECK(bruhat_leq(P({2, 1, 3}), P({2, 3, 1})));
  CHECK_FALSE(bruhat_leq(P({1, 3, 2}), P({2, 1, 3})));
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& v : all_permutations(n)) CHECK(bruhat_leq(v, w) == bruhat_oracle(v, w));
}

TEST_CASE("bruhat ideal") {
  CHECK(bruhat_ideal(Permutation::identity(3)).size() == 1);
  const auto ideal = bruhat_ideal(P({2, 3, 1}));
  CHECK(std::set<Permutation>(ideal.begin(), ideal.end()) ==
        std::set<Permutation>{P({1, 2, 3}), P({2, 1, 3}), P({1, 3, 2}), P({2, 3, 1})});
  CHECK(bruhat_ideal(Permutation::longest(3)).size() == 6);
}

TEST_CASE("action on compositions") {
  // (w.a)_{w(i)} = a_i
  CHECK(act(P({2, 3, 1}), {2, 2, 0}) == WeakComposition{0, 2, 2});
  CHECK(act(P({1, 3, 2}), {2, 2, 0}) == WeakComposition{2, 0, 2});
  for (const auto& v : all_permutations(3))
    for (const auto& w : all_permutations(3)) CHECK(act(v * w, {3, 1, 0}) == act(v, act(w, {3, 1, 0})));
}

TEST_CASE("minimal coset representatives") {
  CHECK(stabilizer_min_rep(Permutation::identity(3), {2, 2, 0}) == Permutation::identity(3));
  CHECK(stabilizer_min_rep(P({3, 2, 1}), {2, 2, 0}) == P({2, 3, 1}));
  CHECK(stabilizer_min_rep(P({1, 3, 2}), {2, 2, 0}) == P({1, 3, 2}));
  const auto reps = coset_reps({2, 2, 0}, 3);
  CHECK(std::set<Permutation>(reps.begin(), reps.end()) ==
        std::set<Permutation>{P({1, 2, 3}), P({1, 3, 2}), P({2, 3, 1})});
  CHECK(coset_reps({0, 0, 0}, 3).size() == 1);
  CHECK(coset_reps({3, 1, 0}, 3).size() == 6);
  for (const WeakComposition& lambda : {WeakComposition{2, 2, 0, 0}, WeakComposition{3, 1, 1, 0}, WeakComposition{1, 1, 1, 1},
                                        WeakComposition{2, 1, 0, 0}}) {
    std::set<Permutation> oracle;
    for (const auto& w : all_permutations(4)) {
      const auto rep = stabilizer_min_rep(w, lambda);
      CHECK(rep == min_rep_oracle(w, lambda));
      CHECK(act(rep, lambda) == act(w, lambda));
      CHECK(bruhat_leq(rep, w));
      oracle.insert(rep);
    }
    const auto got = coset_reps(lambda, 4);
    CHECK(std::set<Permutation>(got.begin(), got.end()) == oracle);
  }
}

TEST_CASE("rectangle coset data") {
  CHECK(rectangle_coset_data(Permutation::identity(3), 2, 2).indices.empty());
  CHECK(rectangle_coset_data(P({1, 3, 2}), 2, 2).indices == std::vector<int>{2});
  CHECK(rectangle_coset_data(P({2, 3, 1}), 2, 2).indices == std::vector<int>{2, 1});
  CHECK_THROWS(rectangle_coset_data(P({2, 1, 3}), 2, 2));
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r) {
      WeakComposition lambda(static_cast<std::size_t>(n), 0);
      std::fill_n(lambda.begin(), r, 2);
      for (const auto& w : coset_reps(lambda, n)) {
        const auto data = rectangle_coset_data(w, r, 2);
        CHECK(data.reconstruct(n) == w);
        CHECK(static_cast<int>(data.reduced_word().size()) == length(w));
        CHECK(std::is_sorted(data.indices.rbegin(), data.indices.rend()));
        const std::vector<int> pattern{3, 2, 1};
        CHECK(avoids_pattern(w, pattern));
      }
    }
}

TEST_CASE("flag vector") {
  CHECK(flag_vector(Permutation::identity(3), 2, 2) == std::vector<int>{1, 2});
  CHECK(flag_vector(P({1, 3, 2}), 2, 2) == std::vector<int>{1, 3});
  CHECK(flag_vector(P({2, 3, 1}), 2, 2) == std::vector<int>{2, 3});
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= std::min(n, 3); ++r) {
      WeakComposition lambda(static_cast<std::size_t>(n), 0);
      std::fill_n(lambda.begin(), r, 3);
      for (const auto& w : all_permutations(n)) {
        const auto rep = stabilizer_min_rep(w, lambda);
        const auto flag = flag_vector(rep, r, 3);
        for (int m = 1; m <= r; ++m) CHECK(flag[static_cast<std::size_t>(m - 1)] == rep(m));
        CHECK(std::adjacent_find(flag.begin(), flag.end(), std::greater_equal<>()) == flag.end());
      }
    }
}

TEST_CASE("pattern avoidance") {
  const std::vector<int> p2143{2, 1, 4, 3};
  const std::vector<int> p312{3, 1, 2};
  CHECK_FALSE(avoids_pattern(P({2, 1, 4, 3}), p2143));
  CHECK(avoids_pattern(P({1, 2, 3}), p2143));
  CHECK_FALSE(avoids_pattern(P({3, 1, 2}), p312));
  CHECK_FALSE(avoids_pattern(P({5, 2, 4, 1, 3}), p312));
  CHECK(avoids_pattern(P({1, 2, 3, 4}), p312));
  // 2143-avoiders: 23 in S_4
  int count = 0;
  for (const auto& w : all_permutations(4)) count += avoids_pattern(w, p2143);
  CHECK(count == 23);
}

TEST_CASE("lehmer code") {
  CHECK(lehmer_code(Permutation::identity(4)) == WeakComposition{0, 0, 0, 0});
  CHECK(lehmer_code(P({3, 2, 1})) == WeakComposition{2, 1, 0});
  CHECK(lehmer_code(P({2, 3, 1})) == WeakComposition{1, 1, 0});
  std::set<WeakComposition> codes;
  for (const auto& w : all_permutations(4)) {
    const auto c = lehmer_code(w);
    int sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c[i] <= static_cast<int>(c.size() - 1 - i));
      sum += c[i];
    }
    CHECK(sum == length(w));
    codes.insert(c);
  }
  CHECK(codes.size() == 24);
}

TEST_CASE("longest times a word read left to right") {
  // w0 * (s_{i_l} ... s_{i_1})
  const std::vector<int> word{2, 4, 3, 4};
  const std::vector<int> rev{4, 3, 4, 2};
  CHECK(longest_times_word_ltr(5, word) == Permutation::longest(5) * Permutation::from_word(5, rev));
  CHECK(lehmer_code(longest_times_word_ltr(5, word)) == WeakComposition{4, 0, 2, 0, 0});
  CHECK(longest_times_word_ltr(3, {}) == Permutation::longest(3));
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS(Permutation::from_word(3, std::vector<int>{3}));
}
