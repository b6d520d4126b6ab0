#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kcrystal/permutation.hpp"

namespace kcrystal {

/// beta^beta * x_1^{x[0]} ... x_n^{x[n-1]}. Ordered by (beta, x) lexicographically.
struct Monomial {
  int beta = 0;
  std::vector<int> x;

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact element of Z[beta][x_1, ..., x_n]. Zero coefficients are never
/// stored.
class BetaPolynomial {
 public:
  using Coefficient = std::int64_t;
  using Terms = std::map<Monomial, Coefficient>;

  BetaPolynomial() = default;
  explicit BetaPolynomial(int n) : n_(n) {}

  static BetaPolynomial constant(int n, Coefficient c);
  static BetaPolynomial monomial(int n, std::vector<int> exponents, int beta = 0, Coefficient c = 1);
  static BetaPolynomial variable(int n, int i);
  static BetaPolynomial beta(int n);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Monomial& m) const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, Coefficient c);

  BetaPolynomial& operator+=(const BetaPolynomial& rhs);
  BetaPolynomial& operator-=(const BetaPolynomial& rhs);
  BetaPolynomial operator-() const;
  friend BetaPolynomial operator+(BetaPolynomial lhs, const BetaPolynomial& rhs) { return lhs += rhs; }
  friend BetaPolynomial operator-(BetaPolynomial lhs, const BetaPolynomial& rhs) { return lhs -= rhs; }
  friend BetaPolynomial operator*(const BetaPolynomial& lhs, const BetaPolynomial& rhs);
  BetaPolynomial scaled(Coefficient c) const;

  friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;

  /// Same polynomial in a ring with m >= n variables.
  BetaPolynomial embed(int m) const;
  /// beta = 0 specialization.
  BetaPolynomial at_beta_zero() const;

  /// Canonical text, e.g. "x1^2*x2 + 2*b*x1*x2^2 - b^2*x3". Zero is "0".
  std::string str() const;

 private:
  void require_same_ring(const BetaPolynomial& rhs) const;

  int n_ = 0;
  Terms terms_;
};

/// Parses the text produced by BetaPolynomial::str().
BetaPolynomial parse_polynomial(const std::string& text, int n);

BetaPolynomial swap_action(const BetaPolynomial& p, int i);

/// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
BetaPolynomial divided_difference(const BetaPolynomial& p, int i);

/// pi_i f = d_i(x_i f).
BetaPolynomial demazure_pi(const BetaPolynomial& p, int i);

/// varpi_i f = pi_i((1 + beta x_{i+1}) f).
BetaPolynomial demazure_lascoux(const BetaPolynomial& p, int i);

/// varpi_i f - f.
BetaPolynomial demazure_lascoux_atom(const BetaPolynomial& p, int i);

/// d_i^beta f = ((1 + beta x_i) f - (1 + beta x_{i+1}) s_i f) / (x_i - x_{i+1})
///            = d_i f + beta pi_i f.
BetaPolynomial isobaric_beta(const BetaPolynomial& p, int i);

/// d_i((1 + beta x_{i+1}) f), the step of the beta-Grothendieck recursion.
/// Differs from isobaric_beta by the placement of the beta factors.
BetaPolynomial grothendieck_step(const BetaPolynomial& p, int i);

/// Applies op_{i_1} op_{i_2} ... op_{i_l} to p (rightmost letter first).
template <typename Op>
BetaPolynomial apply_word(BetaPolynomial p, const std::vector<int>& word, Op op) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = op(p, *it);
  return p;
}

/// L_a = varpi_w x^lambda with a = w lambda and w a minimal coset
/// representative. The word defaults to a reduced word of that
/// representative; any other reduced word of it may be supplied.
BetaPolynomial lascoux(const WeakComposition& a, int n);
BetaPolynomial lascoux(const WeakComposition& a, int n, const std::vector<int>& word);

/// Lascoux atom, the varpi_i - 1 chain.
BetaPolynomial lascoux_atom(const WeakComposition& a, int n);

/// Demazure character kappa_a, the pi_i chain.
BetaPolynomial key_polynomial(const WeakComposition& a, int n);

/// beta-Grothendieck polynomial of w in S_n: G_{w0} is the staircase
/// x_1^{n-1} ... x_{n-1}, and G_{u s_a} = grothendieck_step(G_u, a) whenever
/// u s_a < u.
BetaPolynomial grothendieck(const Permutation& w);

}  // namespace kcrystal
