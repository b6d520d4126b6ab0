#pragma once

#include <string>
#include <vector>

#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

/// Column j holds {i : a_i >= j}. Entries bounded by n = a.size().
SetValuedTableau key_of_composition(const WeakComposition& a);

/// Singleton tableau whose column supports are nested left to right.
bool is_key(const SetValuedTableau& t);

/// Right key of a semistandard (singleton) tableau: the key of v.lambda for
/// the Bruhat-minimal coset representative v whose classical Demazure
/// crystal contains t.
SetValuedTableau right_key(const SetValuedTableau& t);

/// Largest / smallest entry of each box.
SetValuedTableau max_tableau(const SetValuedTableau& t);
SetValuedTableau min_tableau(const SetValuedTableau& t);

/// k(max(T)).
SetValuedTableau calK(const SetValuedTableau& t);

/// Lusztig involution on the e_i/f_i component of t: mirror a raising path
/// to the highest weight element, starting from the component's lowest
/// weight element with indices complemented.
SetValuedTableau lusztig_star(const SetValuedTableau& t);

/// Rotate by 180 degrees and replace i by n+1-i. Rectangles only.
SetValuedTableau k_lusztig_star(const SetValuedTableau& t);

enum class Involution { kNaiveStar, kRectStar };

std::string to_string(Involution inv);
Involution parse_involution(const std::string& name);

/// k(min(T^dagger)^*), where dagger is the chosen involution.
SetValuedTableau K_key(const SetValuedTableau& t, Involution inv);

/// Entrywise comparison of singleton tableaux of equal shape.
bool preceq(const SetValuedTableau& lhs, const SetValuedTableau& rhs);

/// Which key map a report row used.
enum class KeyMap { kCalK, kK };

struct Conjecture61Row {
  WeakComposition shape;
  Permutation w;
  KeyMap map = KeyMap::kCalK;
  /// Empty for calK.
  std::string involution;
  bool atom = false;
  bool match = false;
  /// Character minus expected polynomial when match is false.
  std::string witness;
};

/// For each coset representative w of lambda compares the characters of
/// {T : key(T) <= K_{w lambda}} and {T : key(T) = K_{w lambda}} with the
/// Lascoux polynomial and atom. Rows cover calK, K with the naive star, and
/// K with the rectangle star when lambda is a rectangle.
std::vector<Conjecture61Row> conjecture61_report(const WeakComposition& lambda, int n);

}  // namespace kcrystal
