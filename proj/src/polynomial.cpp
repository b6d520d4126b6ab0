#include "kcrystal/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kcrystal {

namespace {

using Coefficient = BetaPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

void check_index(const BetaPolynomial& p, int i) {
  if (i < 1 || i >= p.nvars()) throw std::out_of_range("operator index out of range");
}

}  // namespace

int Monomial::degree() const { return std::accumulate(x.begin(), x.end(), 0); }

BetaPolynomial BetaPolynomial::constant(int n, Coefficient c) {
  return monomial(n, std::vector<int>(static_cast<std::size_t>(n), 0), 0, c);
}

BetaPolynomial BetaPolynomial::monomial(int n, std::vector<int> exponents, int beta, Coefficient c) {
  if (static_cast<int>(exponents.size()) > n) throw std::invalid_argument("monomial has more exponents than variables");
  exponents.resize(static_cast<std::size_t>(n), 0);
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (beta < 0) throw std::invalid_argument("negative beta exponent");
  BetaPolynomial p(n);
  p.add_term(Monomial{beta, std::move(exponents)}, c);
  return p;
}

BetaPolynomial BetaPolynomial::variable(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(n, std::move(e));
}

BetaPolynomial BetaPolynomial::beta(int n) { return monomial(n, {}, 1); }

BetaPolynomial::Coefficient BetaPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void BetaPolynomial::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  if (static_cast<int>(m.x.size()) != n_) throw std::invalid_argument("monomial variable count mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void BetaPolynomial::require_same_ring(const BetaPolynomial& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomials live in rings with different variable counts");
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BetaPolynomial& BetaPolynomial::operator-=(const BetaPolynomial& rhs) {
  require_same_ring(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

BetaPolynomial BetaPolynomial::operator-() const { return scaled(-1); }

BetaPolynomial BetaPolynomial::scaled(Coefficient c) const {
  BetaPolynomial out(n_);
  for (const auto& [m, k] : terms_) out.add_term(m, checked_mul(k, c));
  return out;
}

BetaPolynomial operator*(const BetaPolynomial& lhs, const BetaPolynomial& rhs) {
  lhs.require_same_ring(rhs);
  BetaPolynomial out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m{ma.beta + mb.beta, ma.x};
      for (std::size_t k = 0; k < m.x.size(); ++k) m.x[k] += mb.x[k];
      out.add_term(m, checked_mul(ca, cb));
    }
  }
  return out;
}

BetaPolynomial BetaPolynomial::embed(int m) const {
  if (m < n_) throw std::invalid_argument("embed: target ring is smaller");
  BetaPolynomial out(m);
  for (const auto& [mono, c] : terms_) {
    Monomial wide = mono;
    wide.x.resize(static_cast<std::size_t>(m), 0);
    out.add_term(wide, c);
  }
  return out;
}

BetaPolynomial BetaPolynomial::at_beta_zero() const {
  BetaPolynomial out(n_);
  for (const auto& [m, c] : terms_)
    if (m.beta == 0) out.add_term(m, c);
  return out;
}

std::string BetaPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Coefficient mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      mag = c < 0 ? -c : c;
    }
    first = false;
    std::vector<std::string> factors;
    if (m.beta > 0) factors.push_back(m.beta == 1 ? "b" : "b^" + std::to_string(m.beta));
    for (std::size_t k = 0; k < m.x.size(); ++k) {
      if (m.x[k] == 0) continue;
      std::string f = "x" + std::to_string(k + 1);
      if (m.x[k] > 1) f += "^" + std::to_string(m.x[k]);
      factors.push_back(std::move(f));
    }
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), std::to_string(mag));
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

BetaPolynomial parse_polynomial(const std::string& text, int n) {
  BetaPolynomial out(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> long long {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse_polynomial: expected a number at offset " + std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    Coefficient sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("parse_polynomial: expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    Monomial m{0, std::vector<int>(static_cast<std::size_t>(n), 0)};
    Coefficient coef = 1;
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= text.size()) throw std::invalid_argument("parse_polynomial: truncated term");
      const char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef = checked_mul(coef, read_int());
      } else if (ch == 'b') {
        ++pos;
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = static_cast<int>(read_int());
        }
        m.beta += e;
      } else if (ch == 'x') {
        ++pos;
        const long long var = read_int();
        if (var < 1 || var > n) throw std::invalid_argument("parse_polynomial: variable index out of range");
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = static_cast<int>(read_int());
        }
        m.x[static_cast<std::size_t>(var - 1)] += e;
      } else {
        throw std::invalid_argument(std::string("parse_polynomial: unexpected character '") + ch + "'");
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    out.add_term(m, checked_mul(sign, coef));
  }
  return out;
}

BetaPolynomial swap_action(const BetaPolynomial& p, int i) {
  check_index(p, i);
  BetaPolynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    std::swap(s.x[static_cast<std::size_t>(i - 1)], s.x[static_cast<std::size_t>(i)]);
    out.add_term(s, c);
  }
  return out;
}

BetaPolynomial divided_difference(const BetaPolynomial& p, int i) {
  check_index(p, i);
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i);
  BetaPolynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const int hi = m.x[a];
    const int lo = m.x[b];
    if (hi == lo) continue;
    // x_i^p x_{i+1}^q with p > q telescopes to sum_t x_i^{p-1-t} x_{i+1}^{q+t};
    // the p < q case is the negation of its mirror.
    const int big = std::max(hi, lo);
    const int small = std::min(hi, lo);
    const Coefficient sign = hi > lo ? 1 : -1;
    Monomial t = m;
    for (int k = 0; k < big - small; ++k) {
      t.x[a] = big - 1 - k;
      t.x[b] = small + k;
      out.add_term(t, checked_mul(sign, c));
    }
  }
  return out;
}

namespace {

BetaPolynomial times_variable(const BetaPolynomial& p, int i, int beta_power = 0) {
  BetaPolynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial t = m;
    ++t.x[static_cast<std::size_t>(i - 1)];
    t.beta += beta_power;
    out.add_term(t, c);
  }
  return out;
}

}  // namespace

BetaPolynomial demazure_pi(const BetaPolynomial& p, int i) {
  check_index(p, i);
  return divided_difference(times_variable(p, i), i);
}

BetaPolynomial demazure_lascoux(const BetaPolynomial& p, int i) {
  check_index(p, i);
  return demazure_pi(p + times_variable(p, i + 1, 1), i);
}

BetaPolynomial demazure_lascoux_atom(const BetaPolynomial& p, int i) { return demazure_lascoux(p, i) - p; }

BetaPolynomial isobaric_beta(const BetaPolynomial& p, int i) {
  check_index(p, i);
  BetaPolynomial pi = demazure_pi(p, i);
  BetaPolynomial out = divided_difference(p, i);
  for (const auto& [m, c] : pi.terms()) {
    Monomial t = m;
    ++t.beta;
    out.add_term(t, c);
  }
  return out;
}

BetaPolynomial grothendieck_step(const BetaPolynomial& p, int i) {
  check_index(p, i);
  return divided_difference(p + times_variable(p, i + 1, 1), i);
}

namespace {

struct DominantData {
  WeakComposition lambda;
  Permutation rep;
};

DominantData dominant_data(const WeakComposition& a, int n) {
  if (static_cast<int>(a.size()) > n) throw std::invalid_argument("weight longer than the variable count");
  WeakComposition padded = a;
  padded.resize(static_cast<std::size_t>(n), 0);
  return {sort_descending(padded), min_rep_for(padded)};
}

template <typename Op>
BetaPolynomial chain(const WeakComposition& a, int n, Op op) {
  const auto data = dominant_data(a, n);
  return apply_word(BetaPolynomial::monomial(n, data.lambda), reduced_word(data.rep), op);
}

}  // namespace

BetaPolynomial lascoux(const WeakComposition& a, int n) { return chain(a, n, demazure_lascoux); }

BetaPolynomial lascoux(const WeakComposition& a, int n, const std::vector<int>& word) {
  const auto data = dominant_data(a, n);
  if (Permutation::from_word(n, word) != data.rep || static_cast<int>(word.size()) != length(data.rep))
    throw std::invalid_argument("lascoux: word is not a reduced word of the minimal coset representative");
  return apply_word(BetaPolynomial::monomial(n, data.lambda), word, demazure_lascoux);
}

BetaPolynomial lascoux_atom(const WeakComposition& a, int n) { return chain(a, n, demazure_lascoux_atom); }

BetaPolynomial key_polynomial(const WeakComposition& a, int n) { return chain(a, n, demazure_pi); }

BetaPolynomial grothendieck(const Permutation& w) {
  const int n = w.size();
  std::vector<int> staircase(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) staircase[static_cast<std::size_t>(i)] = n - 1 - i;
  // w = w0 * s_{a_1} ... s_{a_l}, lengths dropping by one per letter, so a_1
  // acts first.
  const auto down = reduced_word(Permutation::longest(n) * w);
  BetaPolynomial g = BetaPolynomial::monomial(n, staircase);
  for (int a : down) g = grothendieck_step(g, a);
  return g;
}

}  // namespace kcrystal
