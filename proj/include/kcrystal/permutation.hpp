#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace kcrystal {

/// A weak composition of length n (non-negative parts). Partitions are the
/// weakly decreasing special case.
using WeakComposition = std::vector<int>;

/// A permutation of {1, ..., n} in one-line notation, w(i) = word[i-1].
///
/// Composition is right-to-left: (v * w)(i) = v(w(i)). Multiplying by s_i on
/// the right swaps the entries at positions i and i+1; on the left it swaps
/// the values i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// Evaluates s_{i_1} * s_{i_2} * ... * s_{i_l}.
  static Permutation from_word(int n, std::span<const int> word);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation times_simple_right(int i) const;
  Permutation times_simple_left(int i) const;

  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Pieces of the reduced factorization of a minimal coset representative for
/// an r x s rectangle: w = (s_{i_k} ... s_{r-k}) ... (s_{i_1} ... s_{r-1})
/// (s_{i_0} ... s_r), each factor a decreasing run.
struct RectangleCosetData {
  int r = 0;
  int s = 0;
  std::vector<int> indices;  // i_0 > i_1 > ... > i_k; empty for the identity

  int k() const { return static_cast<int>(indices.size()) - 1; }
  /// Concatenation of the factors as a single reduced word.
  std::vector<int> reduced_word() const;
  Permutation reconstruct(int n) const;

  friend bool operator==(const RectangleCosetData&, const RectangleCosetData&) = default;
};

int length(const Permutation& w);

/// Every reduced word of w. Refuses n larger than max_n.
std::vector<std::vector<int>> reduced_words(const Permutation& w, int max_n = 7);

/// Lexicographically smallest reduced word.
std::vector<int> reduced_word(const Permutation& w);

/// Strong Bruhat order v <= w, by greedy subword extraction along one reduced
/// word of w.
bool bruhat_leq(const Permutation& v, const Permutation& w);

std::vector<Permutation> bruhat_ideal(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

/// (w . a)_{w(i)} = a_i.
WeakComposition act(const Permutation& w, const WeakComposition& a);

bool is_partition(const WeakComposition& a);

/// Sorted weakly decreasing.
WeakComposition sort_descending(WeakComposition a);

/// Minimal length representative of w in S_n / Stab_n(lambda).
Permutation stabilizer_min_rep(const Permutation& w, const WeakComposition& lambda);

/// The unique minimal representative v with v . lambda = a, where lambda is
/// the decreasing sort of a.
Permutation min_rep_for(const WeakComposition& a);

bool is_min_coset_rep(const Permutation& w, const WeakComposition& lambda);

/// Minimal coset representatives of S_n / Stab_n(lambda), sorted by length
/// then by one-line word.
std::vector<Permutation> coset_reps(const WeakComposition& lambda, int n);

/// Throws std::invalid_argument unless w is a minimal coset representative
/// for the rectangle s^r in S_n.
RectangleCosetData rectangle_coset_data(const Permutation& w, int r, int s);

/// Row bounds b_1 < ... < b_r of the flagged set for the rectangle s^r:
/// entries of row m are at most b_m = floor(w)(m).
std::vector<int> flag_vector(const Permutation& w, int r, int s);

/// True iff no subsequence of w is order-isomorphic to pattern.
bool avoids_pattern(const Permutation& w, std::span<const int> pattern);

WeakComposition lehmer_code(const Permutation& w);

/// The index "w0 s_{i_1} ... s_{i_l}" of a Grothendieck polynomial, with the
/// factors composed as maps applied left to right: w0 * s_{i_l} * ... * s_{i_1}
/// in this library's convention.
Permutation longest_times_word_ltr(int n, const std::vector<int>& word);

}  // namespace kcrystal
