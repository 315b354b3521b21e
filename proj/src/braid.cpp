#include "monodromy/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "monodromy/free_group.hpp"

namespace monodromy {

namespace {

void check_letters(int n, const std::vector<int>& ls) {
  if (n < 1) throw std::invalid_argument("braid word: strand count must be >= 1");
  for (int k : ls) {
    if (k == 0 || std::abs(k) > n - 1)
      throw std::invalid_argument("braid word: letter " + std::to_string(k) +
                                  " out of range for " + std::to_string(n) + " strands");
  }
}

void check_same_strands(const BraidWord& a, const BraidWord& b, const char* op) {
  if (a.strands != b.strands)
    throw std::invalid_argument(std::string(op) + ": strand-count mismatch (" +
                                std::to_string(a.strands) + " vs " +
                                std::to_string(b.strands) + ")");
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  check_letters(n, letters);
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation p;
  p.images.reserve(images.size());
  for (int v : images) p.images.push_back(next.apply(v));
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 1; i <= degree(); ++i) p.images[static_cast<std::size_t>(apply(i)) - 1] = i;
  return p;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images.size(), false);
  std::vector<int> lens;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i) - 1]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<std::size_t>(j) - 1] = true;
      j = apply(j);
      ++len;
    } while (j != i);
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<Permutation> permutation_closure(int degree, const std::vector<Permutation>& gens,
                                             std::size_t limit) {
  std::unordered_set<std::string> seen;
  auto key = [](const Permutation& p) {
    return std::string(reinterpret_cast<const char*>(p.images.data()),
                       p.images.size() * sizeof(int));
  };
  Permutation id = Permutation::identity(degree);
  std::vector<Permutation> elements{id};
  seen.insert(key(id));
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur.then(g);
      if (!seen.insert(key(next)).second) continue;
      if (elements.size() >= limit)
        throw std::invalid_argument("permutation_closure: group larger than limit");
      elements.push_back(next);
      frontier.push_back(std::move(next));
    }
  }
  return elements;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  check_same_strands(a, b, "compose");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  r.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  check_same_strands(a, g, "conjugate");
  BraidWord r = g;
  r.letters.insert(r.letters.end(), a.letters.begin(), a.letters.end());
  for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

Permutation permutation_of(const BraidWord& a) {
  // Endpoint map: strand starting at position s ends at images[s-1].
  std::vector<int> at(static_cast<std::size_t>(a.strands));  // position -> strand
  std::iota(at.begin(), at.end(), 1);
  for (int k : a.letters) {
    int i = std::abs(k);
    std::swap(at[static_cast<std::size_t>(i) - 1], at[static_cast<std::size_t>(i)]);
  }
  Permutation p;
  p.images.resize(at.size());
  for (int pos = 1; pos <= a.strands; ++pos)
    p.images[static_cast<std::size_t>(at[static_cast<std::size_t>(pos) - 1]) - 1] = pos;
  return p;
}

int exponent_sum(const BraidWord& a) {
  int s = 0;
  for (int k : a.letters) s += (k > 0) ? 1 : -1;
  return s;
}

bool is_syntactically_positive(const BraidWord& a) {
  return std::all_of(a.letters.begin(), a.letters.end(), [](int k) { return k > 0; });
}

BraidWord full_twist(int n) {
  if (n < 1) throw std::invalid_argument("full_twist: n must be >= 1");
  BraidWord r;
  r.strands = n;
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) r.letters.push_back(i);
  return r;
}

BraidWord shift_into(const BraidWord& part, int start, int total_strands) {
  if (start < 1 || start + part.strands - 1 > total_strands)
    throw std::invalid_argument("shift_into: block out of range");
  BraidWord r;
  r.strands = total_strands;
  r.letters.reserve(part.letters.size());
  int off = start - 1;
  for (int k : part.letters) r.letters.push_back(k > 0 ? k + off : k - off);
  return r;
}

BraidWord block_embed(const std::vector<BraidWord>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.strands;
  if (n == 0) n = 1;
  BraidWord r;
  r.strands = n;
  int off = 0;
  for (const auto& p : parts) {
    for (int k : p.letters) r.letters.push_back(k > 0 ? k + off : k - off);
    off += p.strands;
  }
  return r;
}

std::vector<std::vector<int>> canonical_form(const BraidWord& a) {
  std::vector<std::vector<int>> images;
  images.reserve(static_cast<std::size_t>(a.strands));
  for (int i = 1; i <= a.strands; ++i)
    images.push_back(act(FreeWord(a.strands, {i}), a).letters);
  return images;
}

std::string canonical_key(const BraidWord& a) {
  // Letters are nonzero, so 0 works as a separator; ints are packed raw.
  std::vector<int> flat;
  for (const auto& img : canonical_form(a)) {
    flat.insert(flat.end(), img.begin(), img.end());
    flat.push_back(0);
  }
  return std::string(reinterpret_cast<const char*>(flat.data()), flat.size() * sizeof(int));
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  check_same_strands(a, b, "braid_equal");
  return canonical_form(a) == canonical_form(b);
}

std::optional<BraidWord> conjugacy_search(const BraidWord& a, const BraidWord& b, int max_len) {
  check_same_strands(a, b, "conjugacy_search");
  // Cheap invariants rule out most non-conjugate pairs immediately.
  if (exponent_sum(a) != exponent_sum(b)) return std::nullopt;
  if (permutation_of(a).cycle_type() != permutation_of(b).cycle_type()) return std::nullopt;

  const std::string target = canonical_key(b);
  std::unordered_set<std::string> seen;
  // States are conjugates g a g^-1, keyed by canonical form.
  std::deque<std::pair<BraidWord, BraidWord>> frontier;  // (conjugator, conjugate)
  BraidWord id;
  id.strands = a.strands;
  seen.insert(canonical_key(a));
  if (canonical_key(a) == target) return id;
  frontier.emplace_back(id, a);

  while (!frontier.empty()) {
    auto [g, x] = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(g.size()) >= max_len) continue;
    for (int i = 1; i < a.strands; ++i) {
      for (int s : {i, -i}) {
        BraidWord g2 = g;
        g2.letters.insert(g2.letters.begin(), s);  // new letter acts outermost
        BraidWord gen(a.strands, {s});
        BraidWord x2 = conjugate(x, gen);
        std::string key = canonical_key(x2);
        if (!seen.insert(key).second) continue;
        if (key == target) return g2;
        frontier.emplace_back(std::move(g2), std::move(x2));
      }
    }
  }
  return std::nullopt;
}

}  // namespace monodromy
