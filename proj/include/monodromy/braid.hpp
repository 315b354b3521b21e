#pragma once

#include <optional>
#include <string>
#include <vector>

namespace monodromy {

// A word in the Artin generators of the braid group B_n.
// Letter k with 0 < |k| < n stands for sigma_{|k|}^{sign k}.
// Composition is read left to right: the first letter acts first.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const BraidWord&) const = default;  // syntactic; see braid_equal
};

// Permutation of {1..n}; images[i-1] is the image of i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  int apply(int i) const { return images[static_cast<std::size_t>(i) - 1]; }
  bool is_identity() const;
  Permutation then(const Permutation& next) const;  // this first, then next
  Permutation inverse() const;
  std::vector<int> cycle_type() const;  // cycle lengths, descending

  bool operator==(const Permutation&) const = default;
};

// Breadth-first closure of the generated subgroup of S_degree; throws when
// the order exceeds limit.
std::vector<Permutation> permutation_closure(int degree, const std::vector<Permutation>& gens,
                                             std::size_t limit = 400000);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
// g * a * g^-1, the convention used by Hurwitz moves.
BraidWord conjugate(const BraidWord& a, const BraidWord& g);

Permutation permutation_of(const BraidWord& a);
int exponent_sum(const BraidWord& a);
bool is_syntactically_positive(const BraidWord& a);

// (sigma_1 ... sigma_{n-1})^n, the positive generator of the center of B_n.
BraidWord full_twist(int n);

// Places the parts on consecutive disjoint strand ranges; images of distinct
// parts commute.
BraidWord block_embed(const std::vector<BraidWord>& parts);
// Same, with the part placed at an explicit 1-based start strand.
BraidWord shift_into(const BraidWord& part, int start, int total_strands);

// Exact equality in B_n, decided through the faithful action on the free
// group (free_group.hpp).
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Canonical form of the group element: the reduced action images of the n
// free generators. Equal keys iff braid_equal.
std::vector<std::vector<int>> canonical_form(const BraidWord& a);
std::string canonical_key(const BraidWord& a);

// Bounded BFS for a conjugator g with |g| <= max_len and g a g^-1 == b.
// Empty result means "none found within the bound", never "not conjugate".
std::optional<BraidWord> conjugacy_search(const BraidWord& a, const BraidWord& b,
                                          int max_len);

}  // namespace monodromy
