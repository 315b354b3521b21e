#pragma once

#include <gmpxx.h>

#include <vector>

#include "monodromy/factorization.hpp"
#include "monodromy/free_group.hpp"

namespace monodromy {

// Finitely presented group: generator count plus freely reduced relators.
struct Presentation {
  int generators = 0;
  std::vector<FreeWord> relators;

  Presentation() = default;
  explicit Presentation(int g) : generators(g) {}

  // Reduces and drops empty relators.
  void add_relator(FreeWord w);
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // entries >= 2, each divides the next

  bool operator==(const AbelianInvariants&) const = default;
};

// Zariski-van Kampen presentation of the affine complement group:
// relators act(mu_i, tau_j) * mu_i^-1 for every factor tau_j and i < n.
// The relations for i = n follow from the others; include_last re-adds them
// for cross-checking.
Presentation zvk_affine(const Factorization& f, bool include_last = false);

// Affine relators plus the relator mu_1 ... mu_n.
Presentation zvk_projective(const Factorization& f, bool include_last = false);

// The economic presentation read off a Puiseux factorization: one relator
// per strand inside each positive block (the last strand of a block is
// redundant), pushed through alpha.
Presentation zvk_puiseux(const PuiseuxFactorization& p);

// Heuristic group-preserving simplification: free/cyclic reduction,
// duplicate removal, single-occurrence generator elimination, and
// shortening substitutions. Never claims minimality.
Presentation tietze_simplify(const Presentation& p, int budget = 1000);

// Diagonal of the Smith normal form, d_1 | d_2 | ..., trailing zeros kept.
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m);

AbelianInvariants abelianize(const Presentation& p);

// Finite permutation group, closed under products.
struct FinitePermGroup {
  int degree = 1;
  std::vector<Permutation> elements;

  static FinitePermGroup from_generators(int degree, const std::vector<Permutation>& gens);
  static FinitePermGroup symmetric(int degree);

  long long order() const { return static_cast<long long>(elements.size()); }
};

// Number of homomorphisms into the target, by backtracking over generator
// assignments with relator pruning. With nonabelian_only, counts only the
// assignments whose image is nonabelian. threads <= 0 reads
// MONODROMY_THREADS (default: hardware concurrency).
long long count_homs(const Presentation& p, const FinitePermGroup& target,
                     bool nonabelian_only = false, int threads = 1);

}  // namespace monodromy
