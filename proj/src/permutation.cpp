#include "kcrystal/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kcrystal {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation: " + str());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation w = identity(n);
  for (int i : word) w = w.times_simple_right(i);
  return w;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(word_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(word_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(out));
}

Permutation Permutation::times_simple_right(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("simple transposition out of range");
  Permutation out = *this;
  std::swap(out.word_[static_cast<std::size_t>(i - 1)], out.word_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation Permutation::times_simple_left(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("simple transposition out of range");
  Permutation out = *this;
  for (int& v : out.word_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
  os << ']';
  return os.str();
}

std::vector<int> RectangleCosetData::reduced_word() const {
  std::vector<int> word;
  for (int j = k(); j >= 0; --j) {
    for (int i = indices[static_cast<std::size_t>(j)]; i >= r - j; --i) word.push_back(i);
  }
  return word;
}

Permutation RectangleCosetData::reconstruct(int n) const {
  const auto word = reduced_word();
  return Permutation::from_word(n, word);
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

std::vector<std::vector<int>> reduced_words(const Permutation& w, int max_n) {
  if (w.size() > max_n) throw std::invalid_argument("reduced_words: n exceeds configured bound");
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  // Peel right descents; the word is built back to front.
  std::function<void(const Permutation&)> rec = [&](const Permutation& u) {
    if (u.is_identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 1; i < u.size(); ++i) {
      if (u(i) > u(i + 1)) {
        suffix.push_back(i);
        rec(u.times_simple_right(i));
        suffix.pop_back();
      }
    }
  };
  rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool has_left_descent(const Permutation& u, int a) {
  // s_a u < u iff the value a+1 sits left of the value a.
  const auto& word = u.word();
  const auto pa = std::find(word.begin(), word.end(), a);
  const auto pb = std::find(word.begin(), word.end(), a + 1);
  return pb < pa;
}

}  // namespace

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation u = w;
  while (!u.is_identity()) {
    for (int a = 1; a < u.size(); ++a) {
      if (has_left_descent(u, a)) {
        word.push_back(a);
        u = u.times_simple_left(a);
        break;
      }
    }
  }
  return word;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  Permutation u = v;
  for (int a : reduced_word(w)) {
    if (has_left_descent(u, a)) u = u.times_simple_left(a);
  }
  return u.is_identity();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> word = Permutation::identity(n).word();
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> bruhat_ideal(const Permutation& w) {
  std::vector<Permutation> out;
  for (auto& v : all_permutations(w.size()))
    if (bruhat_leq(v, w)) out.push_back(std::move(v));
  return out;
}

WeakComposition act(const Permutation& w, const WeakComposition& a) {
  if (static_cast<int>(a.size()) != w.size()) throw std::invalid_argument("act: length mismatch");
  WeakComposition out(a.size());
  for (int i = 1; i <= w.size(); ++i)
    out[static_cast<std::size_t>(w(i) - 1)] = a[static_cast<std::size_t>(i - 1)];
  return out;
}

bool is_partition(const WeakComposition& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (i > 0 && a[i] > a[i - 1]) return false;
  }
  return true;
}

WeakComposition sort_descending(WeakComposition a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

Permutation min_rep_for(const WeakComposition& a) {
  for (int p : a)
    if (p < 0) throw std::invalid_argument("negative part in weak composition");
  const WeakComposition lambda = sort_descending(a);
  const int n = static_cast<int>(a.size());
  std::vector<int> word(a.size());
  std::vector<bool> used(a.size(), false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)] && a[static_cast<std::size_t>(j)] == lambda[static_cast<std::size_t>(i)]) {
        used[static_cast<std::size_t>(j)] = true;
        word[static_cast<std::size_t>(i)] = j + 1;
        break;
      }
    }
  }
  return Permutation(std::move(word));
}

Permutation stabilizer_min_rep(const Permutation& w, const WeakComposition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("stabilizer_min_rep: lambda must be a partition");
  return min_rep_for(act(w, lambda));
}

bool is_min_coset_rep(const Permutation& w, const WeakComposition& lambda) {
  return stabilizer_min_rep(w, lambda) == w;
}

std::vector<Permutation> coset_reps(const WeakComposition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n) throw std::invalid_argument("coset_reps: lambda longer than n");
  WeakComposition padded = lambda;
  padded.resize(static_cast<std::size_t>(n), 0);
  if (!is_partition(padded)) throw std::invalid_argument("coset_reps: lambda must be a partition");
  std::vector<Permutation> out;
  WeakComposition a = padded;
  std::sort(a.begin(), a.end());
  do {
    out.push_back(min_rep_for(a));
  } while (std::next_permutation(a.begin(), a.end()));
  std::sort(out.begin(), out.end(), [](const Permutation& x, const Permutation& y) {
    const int lx = length(x);
    const int ly = length(y);
    return lx != ly ? lx < ly : x < y;
  });
  return out;
}

namespace {

WeakComposition rectangle(int r, int s, int n) {
  if (r < 0 || s < 0 || r > n) throw std::invalid_argument("rectangle does not fit in n rows");
  WeakComposition lambda(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < r; ++i) lambda[static_cast<std::size_t>(i)] = s;
  return lambda;
}

}  // namespace

RectangleCosetData rectangle_coset_data(const Permutation& w, int r, int s) {
  if (s < 1) throw std::invalid_argument("rectangle_coset_data: s must be positive");
  if (!is_min_coset_rep(w, rectangle(r, s, w.size())))
    throw std::invalid_argument("rectangle_coset_data: " + w.str() + " is not a minimal coset representative");
  RectangleCosetData data{r, s, {}};
  for (int j = 0; j < r; ++j) {
    const int m = r - j;
    if (w(m) == m) break;
    data.indices.push_back(w(m) - 1);
  }
  if (data.reconstruct(w.size()) != w)
    throw std::logic_error("rectangle_coset_data: factorization does not reproduce " + w.str());
  return data;
}

std::vector<int> flag_vector(const Permutation& w, int r, int s) {
  if (s < 1) throw std::invalid_argument("flag_vector: s must be positive");
  const Permutation v = stabilizer_min_rep(w, rectangle(r, s, w.size()));
  std::vector<int> bounds;
  for (int m = 1; m <= r; ++m) bounds.push_back(v(m));
  return bounds;
}

bool avoids_pattern(const Permutation& w, std::span<const int> pattern) {
  const int k = static_cast<int>(pattern.size());
  const int n = w.size();
  if (k > n) return true;
  std::vector<int> pick;
  std::function<bool(int)> contains = [&](int start) -> bool {
    if (static_cast<int>(pick.size()) == k) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if ((w(pick[static_cast<std::size_t>(a)]) < w(pick[static_cast<std::size_t>(b)])) !=
              (pattern[static_cast<std::size_t>(a)] < pattern[static_cast<std::size_t>(b)]))
            return false;
      return true;
    }
    for (int i = start; i <= n; ++i) {
      pick.push_back(i);
      const bool hit = contains(i + 1);
      pick.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return !contains(1);
}

WeakComposition lehmer_code(const Permutation& w) {
  WeakComposition code(static_cast<std::size_t>(w.size()), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(j) < w(i)) ++code[static_cast<std::size_t>(i - 1)];
  return code;
}

Permutation longest_times_word_ltr(int n, const std::vector<int>& word) {
  const std::vector<int> reversed(word.rbegin(), word.rend());
  return Permutation::longest(n) * Permutation::from_word(n, reversed);
}

}  // namespace kcrystal
