#include "monodromy/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace monodromy {

void Presentation::add_relator(FreeWord w) {
  if (w.rank != generators)
    throw std::invalid_argument("presentation: relator rank mismatch");
  if (w.empty()) return;
  relators.push_back(std::move(w));
}

Presentation zvk_affine(const Factorization& f, bool include_last) {
  const int n = f.strands;
  Presentation p(n);
  for (const auto& tau : f.factors) {
    const int top = include_last ? n : n - 1;
    for (int i = 1; i <= top; ++i) {
      FreeWord mu(n, {i});
      p.add_relator(concat(act(mu, tau), inverse(mu)));
    }
  }
  return p;
}

Presentation zvk_projective(const Factorization& f, bool include_last) {
  Presentation p = zvk_affine(f, include_last);
  p.add_relator(delta_word(f.strands));
  return p;
}

Presentation zvk_puiseux(const PuiseuxFactorization& pf) {
  validate(pf);
  const int n = pf.strands;
  Presentation p(n);
  for (const auto& e : pf.entries) {
    BraidWord alpha_inv = inverse(e.alpha);
    for (const auto& b : e.blocks) {
      BraidWord beta = shift_into(b.beta, b.start, n);
      // The block braid fixes the product of the block meridians, so the
      // relator for the last strand of the block follows from the others.
      for (int k = b.start; k < b.start + b.width - 1; ++k) {
        FreeWord mu(n, {k});
        FreeWord rel = concat(act(mu, beta), inverse(mu));
        p.add_relator(act(rel, alpha_inv));
      }
    }
  }
  return p;
}

namespace {

using Word = std::vector<int>;

Word reduce_word(const Word& w) { return reduce_letters(w); }

Word cyclic_reduce_word(Word w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo),
              w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word invert_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

// Least rotation of the word or its inverse; identifies relators that define
// the same normal closure trivially.
Word cyclic_canonical(const Word& w) {
  Word best;
  bool first = true;
  const Word inv = invert_word(w);
  for (const Word* v : {&w, &inv}) {
    for (std::size_t r = 0; r < std::max<std::size_t>(v->size(), 1); ++r) {
      Word rot;
      rot.reserve(v->size());
      rot.insert(rot.end(), v->begin() + static_cast<std::ptrdiff_t>(r), v->end());
      rot.insert(rot.end(), v->begin(), v->begin() + static_cast<std::ptrdiff_t>(r));
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

struct WorkingPresentation {
  int generators;
  std::vector<Word> relators;
};

void normalize(WorkingPresentation& wp) {
  std::vector<Word> out;
  std::vector<Word> keys;
  for (auto& r : wp.relators) {
    Word w = cyclic_reduce_word(reduce_word(r));
    if (w.empty()) continue;
    Word key = cyclic_canonical(w);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    out.push_back(std::move(w));
  }
  wp.relators = std::move(out);
}

// Substitute generator `gen` := `expr` everywhere, then drop the generator,
// renumbering the ones above it.
void eliminate_generator(WorkingPresentation& wp, std::size_t rel_idx, int gen,
                         const Word& expr) {
  Word expr_inv = invert_word(expr);
  std::vector<Word> out;
  for (std::size_t i = 0; i < wp.relators.size(); ++i) {
    if (i == rel_idx) continue;
    Word w;
    for (int x : wp.relators[i]) {
      if (x == gen)
        w.insert(w.end(), expr.begin(), expr.end());
      else if (x == -gen)
        w.insert(w.end(), expr_inv.begin(), expr_inv.end());
      else
        w.push_back(x);
    }
    out.push_back(reduce_word(w));
  }
  for (auto& w : out)
    for (int& x : w) {
      if (x > gen) --x;
      if (x < -gen) ++x;
    }
  wp.relators = std::move(out);
  --wp.generators;
}

// Looks for a relator with a single occurrence of some generator; returns
// true after performing the elimination.
bool try_eliminate(WorkingPresentation& wp) {
  for (std::size_t ri = 0; ri < wp.relators.size(); ++ri) {
    const Word& r = wp.relators[ri];
    for (int gen = 1; gen <= wp.generators; ++gen) {
      int count = 0;
      std::size_t pos = 0;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (std::abs(r[k]) == gen) {
          ++count;
          pos = k;
        }
      if (count != 1) continue;
      // Rotate so the occurrence leads: r = gen^e * w, hence gen^e = w^-1.
      Word rot;
      rot.insert(rot.end(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      Word tail(rot.begin() + 1, rot.end());
      Word expr = (rot[0] > 0) ? invert_word(tail) : tail;
      eliminate_generator(wp, ri, gen, expr);
      return true;
    }
  }
  return false;
}

// Replaces a long piece of one relator by the shorter complement of another.
bool try_substitute(WorkingPresentation& wp) {
  for (std::size_t a = 0; a < wp.relators.size(); ++a) {
    const Word& r = wp.relators[a];
    if (r.size() < 2) continue;
    const Word r_inv = invert_word(r);
    for (const Word* base : std::initializer_list<const Word*>{&r, &r_inv}) {
      for (std::size_t rot = 0; rot < base->size(); ++rot) {
        Word v;
        v.insert(v.end(), base->begin() + static_cast<std::ptrdiff_t>(rot), base->end());
        v.insert(v.end(), base->begin(), base->begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t len = v.size(); len * 2 > v.size(); --len) {
          Word piece(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
          Word repl = invert_word(Word(v.begin() + static_cast<std::ptrdiff_t>(len), v.end()));
          for (std::size_t b = 0; b < wp.relators.size(); ++b) {
            if (b == a) continue;
            const Word& s = wp.relators[b];
            if (s.size() < piece.size()) continue;
            auto it = std::search(s.begin(), s.end(), piece.begin(), piece.end());
            if (it == s.end()) continue;
            Word rewritten(s.begin(), it);
            rewritten.insert(rewritten.end(), repl.begin(), repl.end());
            rewritten.insert(rewritten.end(), it + static_cast<std::ptrdiff_t>(piece.size()),
                             s.end());
            rewritten = reduce_word(rewritten);
            if (rewritten.size() < s.size()) {
              wp.relators[b] = std::move(rewritten);
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
  WorkingPresentation wp;
  wp.generators = p.generators;
  for (const auto& r : p.relators) wp.relators.push_back(r.letters);

  normalize(wp);
  int ops = 0;
  while (ops < budget) {
    if (try_eliminate(wp)) {
      normalize(wp);
      ++ops;
      continue;
    }
    if (try_substitute(wp)) {
      normalize(wp);
      ++ops;
      continue;
    }
    break;
  }

  Presentation out(wp.generators);
  if (wp.generators > 0)
    for (auto& r : wp.relators) out.add_relator(FreeWord(wp.generators, r));
  return out;
}

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of least absolute value in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool reduced_something = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      mpz_class q = m[i][t] / m[t][t];  // truncated division: remainder shrinks
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) reduced_something = true;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      mpz_class q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) reduced_something = true;
    }
    if (reduced_something) continue;  // smaller entries appeared; re-pick pivot

    // Pivot must divide the rest of the block for the divisibility chain.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols && divisible; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divisible = false;
        }
    if (!divisible) continue;
    ++t;
  }

  std::vector<mpz_class> diag;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) diag.push_back(abs(m[i][i]));
  return diag;
}

AbelianInvariants abelianize(const Presentation& p) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : p.relators) {
    std::vector<mpz_class> row(static_cast<std::size_t>(p.generators), 0);
    for (int x : r.letters) row[static_cast<std::size_t>(std::abs(x)) - 1] += (x > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = p.generators;
    return inv;
  }
  auto diag = smith_normal_form(std::move(m));
  int nonzero = 0;
  for (const auto& d : diag)
    if (d != 0) ++nonzero;
  inv.free_rank = p.generators - nonzero;
  for (const auto& d : diag)
    if (d > 1) inv.torsion.push_back(d);
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

FinitePermGroup FinitePermGroup::from_generators(int degree,
                                                 const std::vector<Permutation>& gens) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("finite group: generator degree mismatch");
  FinitePermGroup grp;
  grp.degree = degree;
  grp.elements = permutation_closure(degree, gens, 1u << 22);
  return grp;
}

FinitePermGroup FinitePermGroup::symmetric(int degree) {
  if (degree < 1) throw std::invalid_argument("symmetric group: degree must be >= 1");
  if (degree == 1) return from_generators(1, {});
  Permutation swap01 = Permutation::identity(degree);
  std::swap(swap01.images[0], swap01.images[1]);
  Permutation cycle = Permutation::identity(degree);
  std::rotate(cycle.images.begin(), cycle.images.begin() + 1, cycle.images.end());
  return from_generators(degree, {swap01, cycle});
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("MONODROMY_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct HomSearch {
  const Presentation& p;
  const FinitePermGroup& target;
  bool nonabelian_only;
  // Relators indexed by the largest generator they mention, checked as soon
  // as that generator is assigned.
  std::vector<std::vector<const FreeWord*>> check_at;

  explicit HomSearch(const Presentation& pres, const FinitePermGroup& tgt, bool nonab)
      : p(pres), target(tgt), nonabelian_only(nonab) {
    check_at.resize(static_cast<std::size_t>(p.generators) + 1);
    for (const auto& r : p.relators) {
      int top = 0;
      for (int x : r.letters) top = std::max(top, std::abs(x));
      check_at[static_cast<std::size_t>(top)].push_back(&r);
    }
  }

  bool relator_holds(const FreeWord& r, const std::vector<Permutation>& images) const {
    Permutation acc = Permutation::identity(target.degree);
    for (int x : r.letters) {
      const Permutation& g = images[static_cast<std::size_t>(std::abs(x)) - 1];
      acc = (x > 0) ? acc.then(g) : acc.then(g.inverse());
    }
    return acc.is_identity();
  }

  bool image_nonabelian(const std::vector<Permutation>& images) const {
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (!(images[i].then(images[j]) == images[j].then(images[i]))) return true;
    return false;
  }

  long long assign(int idx, std::vector<Permutation>& images) const {
    if (idx > p.generators) {
      if (nonabelian_only && !image_nonabelian(images)) return 0;
      return 1;
    }
    long long total = 0;
    for (const auto& e : target.elements) {
      images[static_cast<std::size_t>(idx) - 1] = e;
      bool ok = true;
      for (const FreeWord* r : check_at[static_cast<std::size_t>(idx)])
        if (!relator_holds(*r, images)) {
          ok = false;
          break;
        }
      if (ok) total += assign(idx + 1, images);
    }
    return total;
  }
};

}  // namespace

long long count_homs(const Presentation& p, const FinitePermGroup& target,
                     bool nonabelian_only, int threads) {
  if (p.generators == 0) return nonabelian_only ? 0 : 1;
  double assignments = std::pow(static_cast<double>(target.order()), p.generators);
  if (assignments > 1e8)
    throw std::invalid_argument("count_homs: enumeration budget exceeded (more than 1e8 assignments)");

  HomSearch search(p, target, nonabelian_only);
  // Relators mentioning no generator at all are empty and were dropped.
  const int nthreads = std::min<int>(resolve_threads(threads),
                                     static_cast<int>(target.elements.size()));
  if (nthreads <= 1 || p.generators == 1) {
    std::vector<Permutation> images(static_cast<std::size_t>(p.generators),
                                    Permutation::identity(target.degree));
    return search.assign(1, images);
  }

  // Split on the first generator's assignment; the total is independent of
  // the split, so output stays deterministic.
  std::atomic<std::size_t> next{0};
  std::vector<long long> partial(static_cast<std::size_t>(nthreads), 0);
  std::vector<std::thread> workers;
  for (int w = 0; w < nthreads; ++w) {
    workers.emplace_back([&, w]() {
      std::vector<Permutation> images(static_cast<std::size_t>(p.generators),
                                      Permutation::identity(target.degree));
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= target.elements.size()) break;
        images[0] = target.elements[i];
        bool ok = true;
        for (const FreeWord* r : search.check_at[1])
          if (!search.relator_holds(*r, images)) {
            ok = false;
            break;
          }
        if (ok) partial[static_cast<std::size_t>(w)] += search.assign(2, images);
      }
    });
  }
  for (auto& th : workers) th.join();
  long long total = 0;
  for (long long v : partial) total += v;
  return total;
}

}  // namespace monodromy
