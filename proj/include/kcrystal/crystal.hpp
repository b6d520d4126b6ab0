#pragma once

#include <optional>
#include <vector>

#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

/// Columns carrying uncanceled signs for index i, left to right. A column
/// holding i but not i+1 is '+', one holding i+1 but not i is '-'; a '-'
/// cancels the nearest free '+' to its right. What survives reads
/// + ... + - ... -.
struct Signature {
  std::vector<int> plus_cols;
  std::vector<int> minus_cols;
};

Signature signature(const SetValuedTableau& t, int i);

std::optional<SetValuedTableau> crystal_f(const SetValuedTableau& t, int i);
std::optional<SetValuedTableau> crystal_e(const SetValuedTableau& t, int i);
std::optional<SetValuedTableau> kcrystal_f(const SetValuedTableau& t, int i);
std::optional<SetValuedTableau> kcrystal_e(const SetValuedTableau& t, int i);

/// e_i as far as it goes, then e_i^K as far as it goes.
SetValuedTableau raise_max(const SetValuedTableau& t, int i);

/// e_i as far as it goes (classical Demazure raising).
SetValuedTableau raise_max_classical(const SetValuedTableau& t, int i);

/// Whether raising along the word (first letter first) ends at the minimal
/// highest weight element.
bool in_demazure(const SetValuedTableau& t, const std::vector<int>& word);

/// Classical Demazure membership, e_i strings only.
bool in_classical_demazure(const SetValuedTableau& t, const std::vector<int>& word);

/// K-Demazure subset for the rectangle s^r along a reduced word of floor(w).
/// Throws std::invalid_argument for non-rectangular shapes.
std::vector<SetValuedTableau> demazure_subset(const Permutation& w, const WeakComposition& shape, int n);
std::vector<SetValuedTableau> demazure_subset(const Permutation& w, const WeakComposition& shape, int n,
                                              const std::vector<int>& word);

/// Tableaux whose row m entries are at most flag_vector(w)_m.
std::vector<SetValuedTableau> flagged_set(const Permutation& w, const WeakComposition& shape, int n);

/// demazure_subset(w) minus the subsets of every coset representative
/// strictly below floor(w).
std::vector<SetValuedTableau> atom_subset(const Permutation& w, const WeakComposition& shape, int n);

BetaPolynomial beta_character(const std::vector<SetValuedTableau>& tableaux, int n);

struct CrystalComponent {
  SetValuedTableau highest;
  std::vector<SetValuedTableau> members;
};

/// Connected components under e_i / f_i, ordered by highest weight text.
std::vector<CrystalComponent> decompose(int n, const WeakComposition& shape);

/// One i-K-string: top = b, f_i b, f_i^2 b, ...; bottom = f_i^K b, f_i f_i^K b, ...
struct IKString {
  std::vector<SetValuedTableau> top;
  std::vector<SetValuedTableau> bottom;
};

/// Splits all tableaux of the shape into i-K-strings, one per element with
/// e_i = e_i^K = 0.
std::vector<IKString> ik_strings(int n, const WeakComposition& shape, int i);

/// Same, over an explicit element set (which must be closed under the
/// i-operators).
std::vector<IKString> ik_strings(const std::vector<SetValuedTableau>& elements, int i);

}  // namespace kcrystal
