#pragma once

#include <optional>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

// Freely reduced word in F_n on meridian generators mu_1..mu_n.
// Letter k means mu_{|k|}^{sign k}; stored words never contain an adjacent
// pair (k, -k).
struct FreeWord {
  int rank = 1;
  std::vector<int> letters;

  FreeWord() = default;
  FreeWord(int rank, std::vector<int> ls);  // reduces on construction

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const FreeWord&) const = default;
};

// Free reduction of a raw letter sequence.
std::vector<int> reduce_letters(const std::vector<int>& ls);

FreeWord reduce(int rank, std::vector<int> letters);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& a);

// mu_1 * mu_2 * ... * mu_n, the inverse of the meridian at infinity.
FreeWord delta_word(int n);

// Right action of B_n on F_n: act(w, t1*t2) == act(act(w, t1), t2).
// On a positive letter sigma_j: mu_j -> mu_j mu_{j+1} mu_j^-1,
// mu_{j+1} -> mu_j, all other generators fixed.
FreeWord act(const FreeWord& w, const BraidWord& t);

// Strips matching conjugating prefix/suffix pairs.
FreeWord cyclic_reduce(const FreeWord& w);

// Index i when w is conjugate to the generator mu_i, nothing otherwise.
std::optional<int> is_meridian_of(const FreeWord& w);

// Ordered tuple of n words of rank n, candidate geometric basis.
struct GeometricTuple {
  int rank = 1;
  std::vector<FreeWord> entries;

  GeometricTuple() = default;
  GeometricTuple(int rank, std::vector<FreeWord> entries);

  bool operator==(const GeometricTuple&) const = default;
};

GeometricTuple standard_tuple(int n);
GeometricTuple act(const GeometricTuple& t, const BraidWord& b);

// True iff the entries form a free basis of F_n, decided by Nielsen
// reduction with length descent (plateau moves explored under a budget).
bool nielsen_is_basis(const GeometricTuple& t);

// True iff the entries are meridians of distinct indices, their product is
// delta_word(n), and they form a basis.
bool is_geometric(const GeometricTuple& t);

// Inverts the action on the standard tuple: a braid g with
// act(standard_tuple(n), g) == t, found by BFS over canonical forms up to
// word length max_len. The group element is unique by freeness of the
// action; empty result means not found within the bound.
std::optional<BraidWord> find_braid(const GeometricTuple& t, int max_len);

}  // namespace monodromy
