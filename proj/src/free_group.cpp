#include "monodromy/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace monodromy {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

void check_rank_letters(int rank, const std::vector<int>& ls) {
  if (rank < 1) throw std::invalid_argument("free word: rank must be >= 1");
  for (int k : ls) {
    if (k == 0 || std::abs(k) > rank)
      throw std::invalid_argument("free word: letter " + std::to_string(k) +
                                  " out of range for rank " + std::to_string(rank));
  }
}

// Image of one free-group letter under one braid generator, appended reduced.
void act_letter(std::vector<int>& out, int x, int braid_letter) {
  int j = std::abs(braid_letter);
  if (braid_letter > 0) {
    if (x == j) {
      push_reduced(out, j);
      push_reduced(out, j + 1);
      push_reduced(out, -j);
    } else if (x == -j) {
      push_reduced(out, j);
      push_reduced(out, -(j + 1));
      push_reduced(out, -j);
    } else if (x == j + 1) {
      push_reduced(out, j);
    } else if (x == -(j + 1)) {
      push_reduced(out, -j);
    } else {
      push_reduced(out, x);
    }
  } else {
    if (x == j) {
      push_reduced(out, j + 1);
    } else if (x == -j) {
      push_reduced(out, -(j + 1));
    } else if (x == j + 1) {
      push_reduced(out, -(j + 1));
      push_reduced(out, j);
      push_reduced(out, j + 1);
    } else if (x == -(j + 1)) {
      push_reduced(out, -(j + 1));
      push_reduced(out, -j);
      push_reduced(out, j + 1);
    } else {
      push_reduced(out, x);
    }
  }
}

std::vector<int> act_letters(const std::vector<int>& word, int braid_letter) {
  std::vector<int> out;
  out.reserve(word.size() * 3);
  for (int x : word) act_letter(out, x, braid_letter);
  return out;
}

}  // namespace

FreeWord::FreeWord(int r, std::vector<int> ls) : rank(r) {
  check_rank_letters(r, ls);
  letters = reduce_letters(ls);
}

std::vector<int> reduce_letters(const std::vector<int>& ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  for (int k : ls) push_reduced(out, k);
  return out;
}

FreeWord reduce(int rank, std::vector<int> letters) { return FreeWord(rank, std::move(letters)); }

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw std::invalid_argument("concat: rank mismatch");
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return FreeWord(a.rank, std::move(ls));
}

FreeWord inverse(const FreeWord& a) {
  std::vector<int> ls;
  ls.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) ls.push_back(-*it);
  FreeWord r;
  r.rank = a.rank;
  r.letters = std::move(ls);  // reversal of a reduced word is reduced
  return r;
}

FreeWord delta_word(int n) {
  std::vector<int> ls(static_cast<std::size_t>(n));
  std::iota(ls.begin(), ls.end(), 1);
  return FreeWord(n, std::move(ls));
}

FreeWord act(const FreeWord& w, const BraidWord& t) {
  if (w.rank != t.strands)
    throw std::invalid_argument("act: rank " + std::to_string(w.rank) +
                                " does not match strand count " + std::to_string(t.strands));
  std::vector<int> cur = w.letters;
  for (int bl : t.letters) cur = act_letters(cur, bl);
  FreeWord r;
  r.rank = w.rank;
  r.letters = std::move(cur);
  return r;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  std::size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord r;
  r.rank = w.rank;
  r.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                   w.letters.begin() + static_cast<std::ptrdiff_t>(hi));
  return r;
}

std::optional<int> is_meridian_of(const FreeWord& w) {
  FreeWord core = cyclic_reduce(w);
  if (core.letters.size() == 1 && core.letters[0] > 0) return core.letters[0];
  return std::nullopt;
}

GeometricTuple::GeometricTuple(int r, std::vector<FreeWord> es) : rank(r), entries(std::move(es)) {
  for (const auto& e : entries)
    if (e.rank != r) throw std::invalid_argument("geometric tuple: entry rank mismatch");
}

GeometricTuple standard_tuple(int n) {
  GeometricTuple t;
  t.rank = n;
  for (int i = 1; i <= n; ++i) t.entries.push_back(FreeWord(n, {i}));
  return t;
}

GeometricTuple act(const GeometricTuple& t, const BraidWord& b) {
  GeometricTuple r;
  r.rank = t.rank;
  r.entries.reserve(t.entries.size());
  for (const auto& e : t.entries) r.entries.push_back(act(e, b));
  return r;
}

namespace {

using Tuple = std::vector<std::vector<int>>;

std::string tuple_key(const Tuple& ws) {
  std::vector<int> flat;
  for (const auto& w : ws) {
    flat.insert(flat.end(), w.begin(), w.end());
    flat.push_back(0);
  }
  return std::string(reinterpret_cast<const char*>(flat.data()), flat.size() * sizeof(int));
}

// A tuple reduced by Nielsen moves is a (signed, permuted) standard basis
// exactly when every word is a single letter and the indices are distinct.
bool is_signed_basis(const Tuple& ws) {
  std::vector<bool> seen(ws.size() + 1, false);
  for (const auto& w : ws) {
    if (w.size() != 1) return false;
    int idx = std::abs(w[0]);
    if (idx > static_cast<int>(ws.size()) || seen[static_cast<std::size_t>(idx)]) return false;
    seen[static_cast<std::size_t>(idx)] = true;
  }
  return true;
}

std::vector<int> product(const std::vector<int>& a, const std::vector<int>& b, bool inv_b,
                         bool b_first) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  auto push_word = [&out](const std::vector<int>& w, bool inv) {
    if (!inv)
      for (int k : w) push_reduced(out, k);
    else
      for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
  };
  if (b_first) {
    push_word(b, inv_b);
    push_word(a, false);
  } else {
    push_word(a, false);
    push_word(b, inv_b);
  }
  return out;
}

// One pass of strictly length-decreasing Nielsen moves. Returns false via
// `dependent` when a product cancels completely (the tuple cannot be a basis).
Tuple greedy_descent(Tuple ws, bool& dependent) {
  dependent = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < ws.size() && !progress; ++i) {
      if (ws[i].empty()) {
        dependent = true;
        return ws;
      }
      for (std::size_t j = 0; j < ws.size() && !progress; ++j) {
        if (i == j) continue;
        for (bool inv : {false, true}) {
          for (bool b_first : {false, true}) {
            std::vector<int> cand = product(ws[i], ws[j], inv, b_first);
            if (cand.empty()) {
              dependent = true;
              return ws;
            }
            if (cand.size() < ws[i].size()) {
              ws[i] = std::move(cand);
              progress = true;
              break;
            }
          }
          if (progress) break;
        }
      }
    }
  }
  return ws;
}

}  // namespace

bool nielsen_is_basis(const GeometricTuple& t) {
  if (static_cast<int>(t.entries.size()) != t.rank) return false;
  Tuple start;
  start.reserve(t.entries.size());
  for (const auto& e : t.entries) {
    if (e.letters.empty()) return false;
    start.push_back(e.letters);
  }

  // Greedy length descent, with a bounded breadth-first walk across
  // length-preserving moves to escape plateaus.
  constexpr std::size_t kStateBudget = 20000;
  std::unordered_set<std::string> visited;
  std::deque<Tuple> queue;
  queue.push_back(std::move(start));

  while (!queue.empty() && visited.size() < kStateBudget) {
    bool dependent = false;
    Tuple ws = greedy_descent(std::move(queue.front()), dependent);
    queue.pop_front();
    if (dependent) return false;
    if (is_signed_basis(ws)) return true;
    Tuple sorted = ws;
    std::sort(sorted.begin(), sorted.end());
    if (!visited.insert(tuple_key(sorted)).second) continue;

    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = 0; j < ws.size(); ++j) {
        if (i == j) continue;
        for (bool inv : {false, true}) {
          for (bool b_first : {false, true}) {
            std::vector<int> cand = product(ws[i], ws[j], inv, b_first);
            if (cand.empty()) return false;
            if (cand.size() <= ws[i].size()) {
              Tuple next = ws;
              next[i] = std::move(cand);
              queue.push_back(std::move(next));
            }
          }
        }
      }
    }
  }
  return false;
}

bool is_geometric(const GeometricTuple& t) {
  if (static_cast<int>(t.entries.size()) != t.rank) return false;
  std::vector<bool> seen(static_cast<std::size_t>(t.rank) + 1, false);
  std::vector<int> prod;
  for (const auto& e : t.entries) {
    auto idx = is_meridian_of(e);
    if (!idx || seen[static_cast<std::size_t>(*idx)]) return false;
    seen[static_cast<std::size_t>(*idx)] = true;
    for (int k : e.letters) push_reduced(prod, k);
  }
  if (prod != delta_word(t.rank).letters) return false;
  return nielsen_is_basis(t);
}

std::optional<BraidWord> find_braid(const GeometricTuple& t, int max_len) {
  if (!is_geometric(t))
    throw std::invalid_argument("find_braid: input tuple is not geometric");
  const int n = t.rank;
  Tuple target;
  for (const auto& e : t.entries) target.push_back(e.letters);
  const std::string target_key = tuple_key(target);

  Tuple start;
  for (int i = 1; i <= n; ++i) start.push_back({i});
  BraidWord id;
  id.strands = n;
  if (tuple_key(start) == target_key) return id;

  std::unordered_set<std::string> seen;
  seen.insert(tuple_key(start));
  std::deque<std::pair<std::vector<int>, Tuple>> queue;  // (braid letters, image tuple)
  queue.emplace_back(std::vector<int>{}, std::move(start));

  while (!queue.empty()) {
    auto [word, tuple] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(word.size()) >= max_len) continue;
    for (int i = 1; i < n; ++i) {
      for (int s : {i, -i}) {
        Tuple next;
        next.reserve(tuple.size());
        for (const auto& w : tuple) next.push_back(act_letters(w, s));
        std::string key = tuple_key(next);
        if (!seen.insert(key).second) continue;
        std::vector<int> next_word = word;
        next_word.push_back(s);
        if (key == target_key) return BraidWord(n, std::move(next_word));
        queue.emplace_back(std::move(next_word), std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace monodromy
