#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/braid.hpp"

namespace monodromy {

// Exact rational exponent.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(|num|, den) == 1

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
};

struct PuiseuxTerm {
  Rational exponent;
  std::complex<double> coeff;
};

// One local branch t -> (t^m, h(t)); terms are the fractional-power series
// h(x^(1/m)) with exponent denominators dividing m.
struct PuiseuxBranch {
  int multiplicity = 1;
  std::vector<PuiseuxTerm> terms;  // exponents strictly increasing
};

struct LocalCurve {
  std::vector<PuiseuxBranch> branches;
  std::complex<double> center{0.0, 0.0};

  int strand_count() const;
};

struct TrackerConfig {
  double radius = 1.0;
  int samples = 512;  // per revolution, >= 64
  double tolerance = 1e-9;
  int max_refinements = 48;
  bool validate_half_radius = true;
};

// Throws on hard invariant violations; returns soft warnings (e.g. a branch
// not presented in reduced form).
std::vector<std::string> validate(const LocalCurve& c);

// Least exponent with a nonzero coefficient; empty for the zero series.
std::optional<Rational> nu_x(const std::vector<PuiseuxTerm>& terms);

std::vector<Rational> characteristic_exponents(const PuiseuxBranch& b);

// max over roots of unity zeta of nu_x(h_j - h_k(zeta x^(1/m_k))), with
// zeta_j fixed to 1. Empty = infinite order = identical branches.
std::optional<Rational> coincidence_exponent(const PuiseuxBranch& bj, const PuiseuxBranch& bk);

// Keeps exactly the terms whose exponent is characteristic for the branch or
// a coincidence exponent against another branch.
LocalCurve essential_truncation(const LocalCurve& c);

// Artin word read off the strands over one counterclockwise turn of the base
// circle, positions ordered lexicographically by (Re, Im).
BraidWord local_braid(const LocalCurve& c, const TrackerConfig& cfg);

// Local braids of several curves at distinct centers, placed on consecutive
// strand blocks in lexicographic center order.
BraidWord semilocal_braid(const std::vector<LocalCurve>& curves, const TrackerConfig& cfg);

struct QuasihomogeneousDegrees {
  long long exponent_sum = 0;
  long long milnor = 0;
  long long intersection = 0;
};

// Predicted invariants of the local braid of y^n = x^m.
QuasihomogeneousDegrees quasihomogeneous_degree_check(int n, int m);

}  // namespace monodromy
