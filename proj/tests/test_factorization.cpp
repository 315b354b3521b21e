#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "monodromy/factorization.hpp"
#include "monodromy/free_group.hpp"
#include "monodromy/presentation.hpp"

using namespace monodromy;

namespace {

BraidWord random_braid(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> letters;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    int g = gen(rng);
    letters.push_back(sign(rng) ? g : -g);
  }
  return BraidWord(n, letters);
}

Factorization random_factorization(std::mt19937& rng, int n, int r, int max_len) {
  std::vector<BraidWord> fs;
  for (int i = 0; i < r; ++i) fs.push_back(random_braid(rng, n, max_len));
  return Factorization(n, fs);
}

}  // namespace

TEST_CASE("expand") {
  {
    PuiseuxFactorization p;
    p.strands = 2;
    p.entries.push_back({BraidWord(2, {}), {{1, 2, BraidWord(2, {1, 1, 1})}}});
    auto f = expand(p);
    REQUIRE(f.size() == 1);
    CHECK(f.factors[0].letters == std::vector<int>{1, 1, 1});
  }
  {
    PuiseuxFactorization p;
    p.strands = 3;
    p.entries.push_back({BraidWord(3, {1}), {{2, 2, BraidWord(2, {1, 1})}}});
    auto f = expand(p);
    CHECK(f.factors[0].letters == std::vector<int>{1, 2, 2, -1});
  }
  {
    PuiseuxFactorization p;
    p.strands = 4;
    p.entries.push_back(
        {BraidWord(4, {}), {{1, 2, BraidWord(2, {1})}, {3, 2, BraidWord(2, {1})}}});
    auto f = expand(p);
    CHECK(f.factors[0].letters == std::vector<int>{1, 3});
  }
  {
    PuiseuxFactorization p;
    p.strands = 3;
    p.entries.push_back(
        {BraidWord(3, {}), {{1, 2, BraidWord(2, {1})}, {2, 2, BraidWord(2, {1})}}});
    CHECK_THROWS_AS(expand(p), std::invalid_argument);
  }
  {
    PuiseuxFactorization p;
    p.strands = 2;
    p.entries.push_back({BraidWord(2, {}), {{1, 2, BraidWord(2, {1, -1})}}});
    CHECK_THROWS_AS(expand(p), std::invalid_argument);  // beta not positive
  }
}

TEST_CASE("pseudo_coxeter") {
  CHECK(pseudo_coxeter(Factorization(2, {BraidWord(2, {1}), BraidWord(2, {1})})).letters ==
        std::vector<int>{1, 1});
  CHECK(pseudo_coxeter(Factorization(3, {})).letters.empty());
  // deformed ordinary triple point multiplies to the full twist
  Factorization deformed(3, {BraidWord(3, {1, 1}), BraidWord(3, {-1, 2, 2, 1}),
                             BraidWord(3, {2, 2})});
  CHECK(braid_equal(pseudo_coxeter(deformed), full_twist(3)));
}

TEST_CASE("is_projective") {
  CHECK(is_projective(Factorization(2, {BraidWord(2, {1}), BraidWord(2, {1})})));
  CHECK(is_projective(Factorization(3, {full_twist(3)})));
  CHECK_FALSE(is_projective(Factorization(2, {BraidWord(2, {1})})));
}

TEST_CASE("hurwitz_move") {
  Factorization f(3, {BraidWord(3, {1}), BraidWord(3, {2})});
  auto moved = hurwitz_move(f, 1);
  CHECK(moved.factors[0].letters == std::vector<int>{1, 2, -1});
  CHECK(moved.factors[1].letters == std::vector<int>{1});

  Factorization g(2, {BraidWord(2, {1}), BraidWord(2, {1})});
  auto gm = hurwitz_move(g, 1);
  CHECK(braid_equal(gm.factors[0], g.factors[0]));
  CHECK(braid_equal(gm.factors[1], g.factors[1]));

  CHECK_THROWS_AS(hurwitz_move(f, 2), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_move(f, 0), std::invalid_argument);
}

TEST_CASE("hurwitz move then inverse is the identity") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + rep % 3;
    int r = 2 + rep % 3;
    Factorization f = random_factorization(rng, n, r, 5);
    std::uniform_int_distribution<int> pick(1, r - 1);
    int i = pick(rng);
    CHECK(canonical_fingerprint(hurwitz_move_inverse(hurwitz_move(f, i), i)) ==
          canonical_fingerprint(f));
    CHECK(canonical_fingerprint(hurwitz_move(hurwitz_move_inverse(f, i), i)) ==
          canonical_fingerprint(f));
  }
}

TEST_CASE("pseudo_coxeter is invariant under hurwitz moves") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + rep % 3;
    int r = 2 + rep % 3;
    Factorization f = random_factorization(rng, n, r, 4);
    std::uniform_int_distribution<int> pick(1, r - 1);
    int i = pick(rng);
    CHECK(braid_equal(pseudo_coxeter(hurwitz_move(f, i)), pseudo_coxeter(f)));
  }
}

TEST_CASE("global_conjugate") {
  Factorization f(3, {BraidWord(3, {1}), BraidWord(3, {2})});
  auto c = global_conjugate(f, BraidWord(3, {}));
  CHECK(canonical_fingerprint(c) == canonical_fingerprint(f));
  auto g = global_conjugate(f, BraidWord(3, {1}));
  CHECK(g.factors[0].letters == std::vector<int>{1, 1, -1});
  CHECK(g.factors[1].letters == std::vector<int>{1, 2, -1});

  std::mt19937 rng(47);
  for (int rep = 0; rep < 40; ++rep) {
    Factorization h = random_factorization(rng, 3, 3, 4);
    BraidWord w = random_braid(rng, 3, 5);
    CHECK(braid_equal(pseudo_coxeter(global_conjugate(h, w)),
                      conjugate(pseudo_coxeter(h), w)));
    CHECK(perm_monodromy_order(global_conjugate(h, w)) == perm_monodromy_order(h));
  }
}

TEST_CASE("canonical_fingerprint separates order") {
  Factorization a(3, {BraidWord(3, {1}), BraidWord(3, {2})});
  Factorization b(3, {BraidWord(3, {2}), BraidWord(3, {1})});
  CHECK(canonical_fingerprint(a) != canonical_fingerprint(b));
  CHECK(canonical_fingerprint(a) != canonical_fingerprint(hurwitz_move(a, 1)));
  Factorization c(2, {BraidWord(2, {1}), BraidWord(2, {1})});
  CHECK(canonical_fingerprint(hurwitz_move(c, 1)) == canonical_fingerprint(c));
}

TEST_CASE("hurwitz_orbit sizes") {
  {
    auto orbit = hurwitz_orbit(Factorization(2, {BraidWord(2, {1}), BraidWord(2, {1})}), 100);
    CHECK(orbit.states.size() == 1);
    CHECK(orbit.complete);
  }
  {
    auto orbit = hurwitz_orbit(Factorization(3, {BraidWord(3, {1}), BraidWord(3, {2})}), 100);
    CHECK(orbit.states.size() == 3);
    CHECK(orbit.complete);
  }
  {
    Factorization deformed(3, {BraidWord(3, {1, 1}), BraidWord(3, {-1, 2, 2, 1}),
                               BraidWord(3, {2, 2})});
    auto orbit = hurwitz_orbit(deformed, 200);
    CHECK(orbit.states.size() >= 1);
    for (const auto& s : orbit.states)
      CHECK(braid_equal(pseudo_coxeter(s), pseudo_coxeter(deformed)));
  }
}

// Independent oracle: enumerate pairs (a, b) of short conjugates of the
// generators with a*b == sigma_1 sigma_2 and count distinct factorizations.
TEST_CASE("orbit of (s1, s2) against brute-force enumeration") {
  BraidWord target(3, {1, 2});
  std::vector<BraidWord> conjugators;
  std::vector<std::vector<int>> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int s : {1, -1, 2, -2}) {
          auto w2 = w;
          w2.push_back(s);
          next.push_back(w2);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::vector<BraidWord> candidates;
  std::unordered_set<std::string> seen;
  for (const auto& w : words)
    for (int gen : {1, 2}) {
      BraidWord c = conjugate(BraidWord(3, {gen}), BraidWord(3, w));
      if (seen.insert(canonical_key(c)).second) candidates.push_back(c);
    }
  std::unordered_set<std::string> found;
  for (const auto& a : candidates)
    for (const auto& b : candidates)
      if (braid_equal(compose(a, b), target))
        found.insert(canonical_fingerprint(Factorization(3, {a, b})));
  CHECK(found.size() == 3);
}

TEST_CASE("perm_monodromy_order and components") {
  CHECK(perm_monodromy_order(Factorization(2, {BraidWord(2, {1}), BraidWord(2, {1})})) == 2);
  CHECK(perm_monodromy_order(Factorization(3, {BraidWord(3, {1}), BraidWord(3, {2})})) == 6);
  CHECK(perm_monodromy_order(Factorization(3, {})) == 1);

  CHECK(orbit_count_components(Factorization(2, {BraidWord(2, {1}), BraidWord(2, {1})})) == 1);
  CHECK(orbit_count_components(Factorization(3, {})) == 3);
  CHECK(orbit_count_components(Factorization(4, {BraidWord(4, {1}), BraidWord(4, {3})})) == 2);
}

TEST_CASE("same_orbit") {
  Factorization f(3, {BraidWord(3, {1}), BraidWord(3, {2})});
  CHECK(same_orbit(f, hurwitz_move(f, 1), 100, 2).relation == OrbitRelation::equivalent);
  CHECK(same_orbit(f, global_conjugate(f, BraidWord(3, {2})), 100, 2).relation ==
        OrbitRelation::equivalent);

  Factorization six(2, {BraidWord(2, {1, 1, 1, 1, 1, 1})});
  Factorization two(2, {BraidWord(2, {1, 1})});
  CHECK(same_orbit(six, two, 100, 2).relation == OrbitRelation::distinct);

  // same length-1 shape, different exponent sums
  Factorization a(2, {BraidWord(2, {1})});
  Factorization b(2, {BraidWord(2, {1, 1})});
  CHECK(same_orbit(a, b, 100, 2).relation == OrbitRelation::distinct);
}

TEST_CASE("abelianization is constant along hurwitz orbits") {
  std::mt19937 rng(53);
  for (int rep = 0; rep < 15; ++rep) {
    Factorization f = random_factorization(rng, 3, 3, 3);
    auto base = abelianize(zvk_affine(f));
    auto orbit = hurwitz_orbit(f, 40);
    for (const auto& s : orbit.states) CHECK(abelianize(zvk_affine(s)) == base);
  }
}
