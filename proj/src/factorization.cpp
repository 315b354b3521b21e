#include "monodromy/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "monodromy/free_group.hpp"
#include "monodromy/presentation.hpp"

namespace monodromy {

Factorization::Factorization(int n, std::vector<BraidWord> fs)
    : strands(n), factors(std::move(fs)) {
  if (n < 1) throw std::invalid_argument("factorization: strand count must be >= 1");
  for (const auto& f : factors)
    if (f.strands != n)
      throw std::invalid_argument("factorization: factor strand count mismatch");
}

void validate(const PuiseuxFactorization& p) {
  if (p.strands < 1)
    throw std::invalid_argument("puiseux factorization: strand count must be >= 1");
  for (const auto& e : p.entries) {
    if (e.alpha.strands != p.strands)
      throw std::invalid_argument("puiseux factorization: alpha strand count mismatch");
    std::vector<std::pair<int, int>> ranges;
    for (const auto& b : e.blocks) {
      if (b.width < 1 || b.start < 1 || b.start + b.width - 1 > p.strands)
        throw std::invalid_argument("puiseux factorization: block out of range");
      if (b.beta.strands != b.width)
        throw std::invalid_argument("puiseux factorization: beta strand count != block width");
      if (!is_syntactically_positive(b.beta))
        throw std::invalid_argument("puiseux factorization: beta is not positive");
      ranges.emplace_back(b.start, b.start + b.width - 1);
    }
    std::sort(ranges.begin(), ranges.end());
    for (std::size_t i = 1; i < ranges.size(); ++i)
      if (ranges[i].first <= ranges[i - 1].second)
        throw std::invalid_argument("puiseux factorization: overlapping blocks");
  }
}

Factorization expand(const PuiseuxFactorization& p) {
  validate(p);
  Factorization out;
  out.strands = p.strands;
  for (const auto& e : p.entries) {
    BraidWord body;
    body.strands = p.strands;
    for (const auto& b : e.blocks)
      body = compose(body, shift_into(b.beta, b.start, p.strands));
    out.factors.push_back(conjugate(body, e.alpha));
  }
  return out;
}

BraidWord pseudo_coxeter(const Factorization& f) {
  BraidWord r;
  r.strands = f.strands;
  for (const auto& t : f.factors)
    r.letters.insert(r.letters.end(), t.letters.begin(), t.letters.end());
  return r;
}

bool is_projective(const Factorization& f) {
  return braid_equal(pseudo_coxeter(f), full_twist(f.strands));
}

Factorization hurwitz_move(const Factorization& f, int i) {
  if (i < 1 || i + 1 > static_cast<int>(f.size()))
    throw std::invalid_argument("hurwitz_move: index out of range");
  Factorization r = f;
  auto idx = static_cast<std::size_t>(i) - 1;
  BraidWord moved = conjugate(f.factors[idx + 1], f.factors[idx]);
  r.factors[idx + 1] = f.factors[idx];
  r.factors[idx] = std::move(moved);
  return r;
}

Factorization hurwitz_move_inverse(const Factorization& f, int i) {
  if (i < 1 || i + 1 > static_cast<int>(f.size()))
    throw std::invalid_argument("hurwitz_move_inverse: index out of range");
  Factorization r = f;
  auto idx = static_cast<std::size_t>(i) - 1;
  BraidWord moved = conjugate(f.factors[idx], inverse(f.factors[idx + 1]));
  r.factors[idx] = f.factors[idx + 1];
  r.factors[idx + 1] = std::move(moved);
  return r;
}

Factorization global_conjugate(const Factorization& f, const BraidWord& g) {
  if (g.strands != f.strands)
    throw std::invalid_argument("global_conjugate: strand-count mismatch");
  Factorization r;
  r.strands = f.strands;
  r.factors.reserve(f.size());
  for (const auto& t : f.factors) r.factors.push_back(conjugate(t, g));
  return r;
}

std::string canonical_fingerprint(const Factorization& f) {
  std::string key;
  for (const auto& t : f.factors) {
    key += canonical_key(t);
    key.push_back('\x01');
  }
  return key;
}

HurwitzOrbit hurwitz_orbit(const Factorization& f, std::size_t max_states) {
  HurwitzOrbit orbit;
  std::unordered_set<std::string> seen;
  std::deque<Factorization> frontier;
  seen.insert(canonical_fingerprint(f));
  orbit.states.push_back(f);
  frontier.push_back(f);
  orbit.complete = true;
  const int r = static_cast<int>(f.size());

  while (!frontier.empty()) {
    Factorization cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i < r; ++i) {
      for (bool inv : {false, true}) {
        Factorization next = inv ? hurwitz_move_inverse(cur, i) : hurwitz_move(cur, i);
        if (!seen.insert(canonical_fingerprint(next)).second) continue;
        if (orbit.states.size() >= max_states) {
          orbit.complete = false;
          return orbit;
        }
        orbit.states.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

namespace {

std::vector<Permutation> factor_permutations(const Factorization& f) {
  std::vector<Permutation> ps;
  ps.reserve(f.size());
  for (const auto& t : f.factors) ps.push_back(permutation_of(t));
  return ps;
}

}  // namespace

long long perm_monodromy_order(const Factorization& f) {
  if (f.strands > 9)
    throw std::invalid_argument("perm_monodromy_order: naive closure supports n <= 9");
  auto elements = permutation_closure(f.strands, factor_permutations(f));
  return static_cast<long long>(elements.size());
}

int orbit_count_components(const Factorization& f) {
  // Orbits of the generated group = connected components under the generators.
  std::vector<int> parent(static_cast<std::size_t>(f.strands));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& p : factor_permutations(f))
    for (int i = 1; i <= f.strands; ++i) {
      int a = find(i - 1), b = find(p.apply(i) - 1);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
  int count = 0;
  for (int i = 0; i < f.strands; ++i)
    if (find(i) == i) ++count;
  return count;
}

namespace {

using PermTuple = std::vector<std::vector<int>>;

PermTuple perm_tuple_of(const Factorization& f) {
  PermTuple t;
  for (const auto& p : factor_permutations(f)) t.push_back(p.images);
  return t;
}

Permutation perm_from_images(std::vector<int> images) {
  Permutation p;
  p.images = std::move(images);
  return p;
}

// Minimal representative of a permutation tuple under simultaneous
// conjugation by all of S_n.
PermTuple conjugation_canonical(const PermTuple& t, int degree) {
  std::vector<int> perm(static_cast<std::size_t>(degree));
  std::iota(perm.begin(), perm.end(), 1);
  PermTuple best;
  bool first = true;
  do {
    Permutation c = perm_from_images(perm);
    Permutation cinv = c.inverse();
    PermTuple cand;
    cand.reserve(t.size());
    for (const auto& images : t) {
      Permutation conj = cinv.then(perm_from_images(images)).then(c);
      cand.push_back(conj.images);
    }
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Orbit of the permutation tuple under Hurwitz moves, with states identified
// up to simultaneous conjugation. Returns completion flag.
bool perm_tuple_orbit(const Factorization& f, int degree, std::size_t max_states,
                      std::set<PermTuple>& out) {
  const int r = static_cast<int>(f.size());
  std::deque<PermTuple> frontier;
  PermTuple start = conjugation_canonical(perm_tuple_of(f), degree);
  out.insert(start);
  frontier.push_back(perm_tuple_of(f));
  std::set<PermTuple> seen_raw{perm_tuple_of(f)};
  while (!frontier.empty()) {
    PermTuple cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i + 1 < r; ++i) {
      for (bool inv : {false, true}) {
        PermTuple next = cur;
        auto pi = perm_from_images(cur[static_cast<std::size_t>(i)]);
        auto pj = perm_from_images(cur[static_cast<std::size_t>(i) + 1]);
        if (!inv) {
          // (p_i p_{i+1} p_i^-1, p_i) in left-to-right composition
          next[static_cast<std::size_t>(i)] = pi.then(pj).then(pi.inverse()).images;
          next[static_cast<std::size_t>(i) + 1] = pi.images;
        } else {
          next[static_cast<std::size_t>(i)] = pj.images;
          next[static_cast<std::size_t>(i) + 1] = pj.inverse().then(pi).then(pj).images;
        }
        if (!seen_raw.insert(next).second) continue;
        if (seen_raw.size() > max_states) return false;
        out.insert(conjugation_canonical(next, degree));
        frontier.push_back(std::move(next));
      }
    }
  }
  return true;
}

}  // namespace

const char* to_string(OrbitRelation r) {
  switch (r) {
    case OrbitRelation::equivalent: return "equivalent";
    case OrbitRelation::distinct: return "distinct";
    case OrbitRelation::unknown: return "unknown";
  }
  return "unknown";
}

SameOrbitResult same_orbit(const Factorization& f1, const Factorization& f2,
                           std::size_t max_states, int conj_len) {
  if (f1.strands != f2.strands)
    return {OrbitRelation::distinct, "strand counts differ"};
  if (f1.size() != f2.size())
    return {OrbitRelation::distinct, "factor counts differ"};

  // Invariant chain; each is constant on Hurwitz orbits (including global
  // conjugation).
  if (exponent_sum(pseudo_coxeter(f1)) != exponent_sum(pseudo_coxeter(f2)))
    return {OrbitRelation::distinct, "pseudo-Coxeter exponent sums differ"};
  {
    auto sums = [](const Factorization& f) {
      std::vector<int> v;
      for (const auto& t : f.factors) v.push_back(exponent_sum(t));
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sums(f1) != sums(f2))
      return {OrbitRelation::distinct, "factor exponent-sum multisets differ"};
  }
  if (f1.strands <= 7 && !f1.factors.empty()) {
    std::set<PermTuple> orbit1;
    if (perm_tuple_orbit(f1, f1.strands, 20000, orbit1)) {
      PermTuple key2 = conjugation_canonical(perm_tuple_of(f2), f2.strands);
      if (!orbit1.count(key2))
        return {OrbitRelation::distinct, "permutation tuples lie in different orbits"};
    }
  }
  {
    Presentation p1 = zvk_affine(f1);
    Presentation p2 = zvk_affine(f2);
    if (!(abelianize(p1) == abelianize(p2)))
      return {OrbitRelation::distinct, "abelianizations of the affine groups differ"};
    for (int deg : {3, 4}) {
      double order = 1;
      for (int k = 2; k <= deg; ++k) order *= k;
      if (std::pow(order, f1.strands) > 1e7) continue;
      FinitePermGroup target = FinitePermGroup::symmetric(deg);
      if (count_homs(p1, target, false) != count_homs(p2, target, false) ||
          count_homs(p1, target, true) != count_homs(p2, target, true))
        return {OrbitRelation::distinct,
                "hom counts into S_" + std::to_string(deg) + " differ"};
    }
  }

  // Bounded search for a witness.
  HurwitzOrbit orbit = hurwitz_orbit(f1, max_states);
  std::unordered_set<std::string> fingerprints;
  for (const auto& s : orbit.states) fingerprints.insert(canonical_fingerprint(s));

  // Enumerate distinct conjugators of word length <= conj_len.
  std::unordered_set<std::string> seen_conj;
  std::deque<BraidWord> conjs;
  BraidWord id;
  id.strands = f1.strands;
  seen_conj.insert(canonical_key(id));
  conjs.push_back(id);
  std::vector<BraidWord> all_conjs{id};
  while (!conjs.empty()) {
    BraidWord g = std::move(conjs.front());
    conjs.pop_front();
    if (static_cast<int>(g.size()) >= conj_len) continue;
    for (int i = 1; i < f1.strands; ++i)
      for (int s : {i, -i}) {
        BraidWord g2 = g;
        g2.letters.push_back(s);
        if (!seen_conj.insert(canonical_key(g2)).second) continue;
        all_conjs.push_back(g2);
        conjs.push_back(std::move(g2));
      }
  }
  for (const auto& g : all_conjs)
    if (fingerprints.count(canonical_fingerprint(global_conjugate(f2, g))))
      return {OrbitRelation::equivalent, "witness found in bounded orbit"};

  return {OrbitRelation::unknown, "bounded search exhausted without witness or invariant"};
}

}  // namespace monodromy
