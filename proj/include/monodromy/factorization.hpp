#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

// Ordered tuple of braids on a common strand count; a braid monodromy
// factorization candidate.
struct Factorization {
  int strands = 1;
  std::vector<BraidWord> factors;

  Factorization() = default;
  Factorization(int n, std::vector<BraidWord> fs);

  std::size_t size() const { return factors.size(); }
};

// One positive block of a Puiseux factor: beta lives on `width` strands and
// is placed starting at 1-based strand `start`.
struct PuiseuxBlock {
  int start = 1;
  int width = 1;
  BraidWord beta;
};

// (alpha, (beta_1, ..., beta_s)): the factor expands to
// alpha * (embedded betas) * alpha^-1.
struct BlockedPuiseuxFactor {
  BraidWord alpha;
  std::vector<PuiseuxBlock> blocks;
};

struct PuiseuxFactorization {
  int strands = 1;
  std::vector<BlockedPuiseuxFactor> entries;
};

// Checks block ranges are disjoint, widths fit, betas positive.
void validate(const PuiseuxFactorization& p);

Factorization expand(const PuiseuxFactorization& p);

// Ordered product of the factors.
BraidWord pseudo_coxeter(const Factorization& f);

// True iff the pseudo-Coxeter element is the full twist.
bool is_projective(const Factorization& f);

// (tau_1,...,tau_i-1, tau_i tau_{i+1} tau_i^-1, tau_i, tau_{i+2},...);
// 1 <= i <= r-1.
Factorization hurwitz_move(const Factorization& f, int i);
Factorization hurwitz_move_inverse(const Factorization& f, int i);

Factorization global_conjugate(const Factorization& f, const BraidWord& g);

// Tuple of the factors' canonical forms; equal keys iff entrywise braid_equal.
std::string canonical_fingerprint(const Factorization& f);

struct HurwitzOrbit {
  std::vector<Factorization> states;  // breadth-first order, states[0] = start
  bool complete = false;              // closure finished below max_states
};

// Closure under Hurwitz moves and their inverses (no global conjugation).
HurwitzOrbit hurwitz_orbit(const Factorization& f, std::size_t max_states);

// Order of the subgroup of S_n generated by the factor permutations.
long long perm_monodromy_order(const Factorization& f);

// Number of orbits of {1..n} under that group (= number of curve components).
int orbit_count_components(const Factorization& f);

enum class OrbitRelation { equivalent, distinct, unknown };

struct SameOrbitResult {
  OrbitRelation relation = OrbitRelation::unknown;
  std::string reason;
};

// Bounded Hurwitz-equivalence test. "distinct" is only returned on the
// strength of a genuine invariant, never on search exhaustion.
SameOrbitResult same_orbit(const Factorization& f1, const Factorization& f2,
                           std::size_t max_states, int conj_len);

const char* to_string(OrbitRelation r);

}  // namespace monodromy
