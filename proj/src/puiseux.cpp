#include "monodromy/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace monodromy {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

int LocalCurve::strand_count() const {
  int n = 0;
  for (const auto& b : branches) n += b.multiplicity;
  return n;
}

std::vector<std::string> validate(const LocalCurve& c) {
  std::vector<std::string> warnings;
  if (c.branches.empty()) throw std::invalid_argument("curve: no branches");
  for (std::size_t j = 0; j < c.branches.size(); ++j) {
    const auto& b = c.branches[j];
    if (b.multiplicity < 1) throw std::invalid_argument("branch: multiplicity must be >= 1");
    long long g = b.multiplicity;
    for (std::size_t t = 0; t < b.terms.size(); ++t) {
      const Rational& e = b.terms[t].exponent;
      if (b.multiplicity % e.den != 0)
        throw std::invalid_argument("branch: exponent denominator does not divide multiplicity");
      if (t > 0 && !(b.terms[t - 1].exponent < e))
        throw std::invalid_argument("branch: exponents must be strictly increasing");
      if (std::abs(b.terms[t].coeff) != 0.0) {
        long long ell = e.num * (b.multiplicity / e.den);
        g = std::gcd(g, ell < 0 ? -ell : ell);
      }
    }
    if (g != 1)
      warnings.push_back("branch " + std::to_string(j + 1) +
                         " is not in reduced form (gcd of multiplicity and exponent "
                         "numerators is " +
                         std::to_string(g) + ")");
  }
  for (std::size_t j = 0; j < c.branches.size(); ++j)
    for (std::size_t k = j + 1; k < c.branches.size(); ++k)
      if (!coincidence_exponent(c.branches[j], c.branches[k]))
        throw std::invalid_argument("curve: branches " + std::to_string(j + 1) + " and " +
                                    std::to_string(k + 1) + " define the same root set");
  return warnings;
}

std::optional<Rational> nu_x(const std::vector<PuiseuxTerm>& terms) {
  for (const auto& t : terms)
    if (std::abs(t.coeff) != 0.0) return t.exponent;
  return std::nullopt;
}

std::vector<Rational> characteristic_exponents(const PuiseuxBranch& b) {
  std::vector<Rational> out;
  long long d = b.multiplicity;
  for (const auto& t : b.terms) {
    if (d == 1) break;
    if (std::abs(t.coeff) == 0.0) continue;
    long long ell = t.exponent.num * (b.multiplicity / t.exponent.den);
    if (ell % d != 0) {
      out.push_back(t.exponent);
      d = std::gcd(d, ell < 0 ? -ell : ell);
    }
  }
  return out;
}

std::optional<Rational> coincidence_exponent(const PuiseuxBranch& bj, const PuiseuxBranch& bk) {
  // All exponents carrying a nonzero coefficient on either side, ascending.
  std::set<Rational, std::less<>> exps;
  double scale = 1.0;
  for (const auto& t : bj.terms)
    if (std::abs(t.coeff) != 0.0) {
      exps.insert(t.exponent);
      scale = std::max(scale, std::abs(t.coeff));
    }
  for (const auto& t : bk.terms)
    if (std::abs(t.coeff) != 0.0) {
      exps.insert(t.exponent);
      scale = std::max(scale, std::abs(t.coeff));
    }
  const double eps = 1e-9 * scale;

  auto coeff_at = [](const PuiseuxBranch& b, const Rational& e) -> std::complex<double> {
    for (const auto& t : b.terms)
      if (t.exponent == e) return t.coeff;
    return {0.0, 0.0};
  };

  std::optional<Rational> best;
  for (int q = 0; q < bk.multiplicity; ++q) {
    std::optional<Rational> order;
    for (const Rational& e : exps) {
      std::complex<double> a = coeff_at(bj, e);
      std::complex<double> b = coeff_at(bk, e);
      if (std::abs(b) != 0.0) {
        // zeta^ell with ell = e * m_k, an integer for every term of b_k
        long long ell = e.num * (bk.multiplicity / e.den);
        double ang = kTwoPi * static_cast<double>(q) * static_cast<double>(ell) /
                     static_cast<double>(bk.multiplicity);
        b *= std::complex<double>(std::cos(ang), std::sin(ang));
      }
      if (std::abs(a - b) > eps) {
        order = e;
        break;
      }
    }
    if (!order) return std::nullopt;  // identical series for this substitution
    if (!best || *best < *order) best = order;
  }
  return best;
}

LocalCurve essential_truncation(const LocalCurve& c) {
  LocalCurve out;
  out.center = c.center;
  for (std::size_t j = 0; j < c.branches.size(); ++j) {
    const auto& b = c.branches[j];
    std::set<Rational, std::less<>> keep;
    for (const Rational& e : characteristic_exponents(b)) keep.insert(e);
    for (std::size_t k = 0; k < c.branches.size(); ++k) {
      if (k == j) continue;
      auto ce = coincidence_exponent(b, c.branches[k]);
      if (!ce)
        throw std::invalid_argument("essential_truncation: branches define the same root set");
      keep.insert(*ce);
    }
    PuiseuxBranch nb;
    nb.multiplicity = b.multiplicity;
    for (const auto& t : b.terms)
      if (keep.count(t.exponent)) nb.terms.push_back(t);
    out.branches.push_back(std::move(nb));
  }
  return out;
}

namespace {

// One strand: sheet k of a branch, evaluated as
// center + sum coeff * radius^e * exp(2 pi i e (s + k)).
struct Strand {
  std::complex<double> center;
  std::vector<std::pair<double, std::complex<double>>> terms;  // (exponent, scaled coeff)
  double phase = 0.0;                                          // the sheet index k
  int branch = 0;
  int sheet = 0;

  std::complex<double> eval(double s) const {
    std::complex<double> v = center;
    for (const auto& [e, c] : terms) {
      double ang = kTwoPi * e * (s + phase);
      v += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return v;
  }
};

bool lex_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

struct Tracker {
  std::vector<Strand> strands;
  TrackerConfig cfg;
  std::vector<int> letters;

  std::vector<std::complex<double>> values(double s) const {
    std::vector<std::complex<double>> v;
    v.reserve(strands.size());
    for (const auto& st : strands) v.push_back(st.eval(s));
    return v;
  }

  void check_collisions(double s, const std::vector<std::complex<double>>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (std::abs(v[i] - v[j]) < cfg.tolerance)
          throw std::invalid_argument(
              "local_braid: strand collision below tolerance at s=" + std::to_string(s) +
              " (radius outside the stable region or branches not distinct)");
  }

  std::vector<int> order(const std::vector<std::complex<double>>& v) const {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&v](int a, int b) {
      return lex_less(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
    });
    return idx;
  }

  // Parameter inside [a, b] where strands u and v trade lexicographic order.
  double crossing_parameter(int u, int v, double a, double b) const {
    auto uv = [this, u, v](double s) {
      std::complex<double> x = strands[static_cast<std::size_t>(u)].eval(s);
      std::complex<double> y = strands[static_cast<std::size_t>(v)].eval(s);
      return lex_less(x, y);
    };
    bool at_a = uv(a);
    if (uv(b) == at_a) return 0.5 * (a + b);  // no detectable flip; settle mid
    for (int it = 0; it < 80 && b - a > 0.0; ++it) {
      double mid = 0.5 * (a + b);
      if (uv(mid) == at_a)
        a = mid;
      else
        b = mid;
    }
    return 0.5 * (a + b);
  }

  // u moved from sorted slot p to p+1 (0-based); positive exactly when u has
  // the smaller imaginary part at the crossing.
  void emit(int u, int v, int p, double a, double b) {
    double s = crossing_parameter(u, v, a, b);
    std::complex<double> x = strands[static_cast<std::size_t>(u)].eval(s);
    std::complex<double> y = strands[static_cast<std::size_t>(v)].eval(s);
    if (std::abs(x - y) < cfg.tolerance)
      throw std::invalid_argument(
          "local_braid: strand collision below tolerance at a crossing (radius outside "
          "the stable region or branches not distinct)");
    int letter = p + 1;
    letters.push_back(x.imag() < y.imag() ? letter : -letter);
  }

  // Resolves an interval whose endpoint orders differ by several swaps and
  // that refinement can no longer split (e.g. genuinely simultaneous
  // crossings of collinear strands): bubble the start order into the end
  // order, one adjacent swap at a time.
  void bubble_resolve(const std::vector<int>& oa, const std::vector<int>& ob, double a,
                      double b) {
    std::vector<int> pos_b(oa.size());
    for (std::size_t p = 0; p < ob.size(); ++p)
      pos_b[static_cast<std::size_t>(ob[p])] = static_cast<int>(p);
    std::vector<int> cur = oa;
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
        int u = cur[p], v = cur[p + 1];
        if (pos_b[static_cast<std::size_t>(u)] > pos_b[static_cast<std::size_t>(v)]) {
          emit(u, v, static_cast<int>(p), a, b);
          std::swap(cur[p], cur[p + 1]);
          swapped = true;
        }
      }
    }
  }

  void track_interval(double a, double b, const std::vector<int>& oa,
                      const std::vector<int>& ob, int depth) {
    if (oa == ob) return;
    // Exactly one adjacent transposition?
    int first = -1, count = 0;
    for (std::size_t p = 0; p < oa.size(); ++p)
      if (oa[p] != ob[p]) {
        if (first < 0) first = static_cast<int>(p);
        ++count;
      }
    if (count == 2 && first + 1 < static_cast<int>(oa.size()) &&
        oa[static_cast<std::size_t>(first)] == ob[static_cast<std::size_t>(first) + 1] &&
        oa[static_cast<std::size_t>(first) + 1] == ob[static_cast<std::size_t>(first)]) {
      emit(oa[static_cast<std::size_t>(first)], oa[static_cast<std::size_t>(first) + 1], first,
           a, b);
      return;
    }
    if (depth >= cfg.max_refinements) {
      bubble_resolve(oa, ob, a, b);
      return;
    }
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
      bubble_resolve(oa, ob, a, b);
      return;
    }
    auto vm = values(mid);
    check_collisions(mid, vm);
    auto om = order(vm);
    track_interval(a, mid, oa, om, depth + 1);
    track_interval(mid, b, om, ob, depth + 1);
  }
};

BraidWord run_tracker(const LocalCurve& c, const TrackerConfig& cfg) {
  Tracker tr;
  tr.cfg = cfg;
  for (std::size_t j = 0; j < c.branches.size(); ++j) {
    const auto& b = c.branches[j];
    for (int k = 0; k < b.multiplicity; ++k) {
      Strand st;
      st.center = c.center;
      st.phase = static_cast<double>(k);
      st.branch = static_cast<int>(j);
      st.sheet = k;
      for (const auto& t : b.terms)
        st.terms.emplace_back(t.exponent.value(),
                              t.coeff * std::pow(cfg.radius, t.exponent.value()));
      tr.strands.push_back(std::move(st));
    }
  }
  const int n = static_cast<int>(tr.strands.size());

  auto v0 = tr.values(0.0);
  for (std::size_t i = 0; i < v0.size(); ++i)
    for (std::size_t j = i + 1; j < v0.size(); ++j)
      if (std::abs(v0[i] - v0[j]) < cfg.tolerance)
        throw std::invalid_argument(
            "local_braid: strand values not pairwise distinct at s=0 under the tolerance "
            "(radius too large or too small)");
  auto o0 = tr.order(v0);

  std::vector<int> prev_order = o0;
  double prev_s = 0.0;
  for (int step = 1; step <= cfg.samples; ++step) {
    double s = static_cast<double>(step) / static_cast<double>(cfg.samples);
    auto v = tr.values(s);
    tr.check_collisions(s, v);
    auto o = tr.order(v);
    tr.track_interval(prev_s, s, prev_order, o, 0);
    prev_order = std::move(o);
    prev_s = s;
  }
  const std::vector<int>& o1 = prev_order;

  // Analytic prediction: sheet k of a branch ends where sheet k+1 started.
  std::vector<int> slot0(static_cast<std::size_t>(n)), slot1(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    slot0[static_cast<std::size_t>(o0[static_cast<std::size_t>(p)])] = p;
    slot1[static_cast<std::size_t>(o1[static_cast<std::size_t>(p)])] = p;
  }
  std::vector<int> first_strand_of_branch(c.branches.size());
  {
    int acc = 0;
    for (std::size_t j = 0; j < c.branches.size(); ++j) {
      first_strand_of_branch[j] = acc;
      acc += c.branches[j].multiplicity;
    }
  }
  BraidWord word(std::max(n, 1), tr.letters);
  Permutation pi = permutation_of(word);
  for (const auto& st : tr.strands) {
    int id = first_strand_of_branch[static_cast<std::size_t>(st.branch)] + st.sheet;
    int succ = first_strand_of_branch[static_cast<std::size_t>(st.branch)] +
               (st.sheet + 1) % c.branches[static_cast<std::size_t>(st.branch)].multiplicity;
    if (slot1[static_cast<std::size_t>(id)] != slot0[static_cast<std::size_t>(succ)])
      throw std::invalid_argument(
          "local_braid: tracked strand permutation does not match the analytic prediction");
    if (pi.apply(slot0[static_cast<std::size_t>(id)] + 1) !=
        slot1[static_cast<std::size_t>(id)] + 1)
      throw std::invalid_argument(
          "local_braid: emitted word permutation does not match the tracked strands");
  }
  return word;
}

void check_config(const TrackerConfig& cfg) {
  if (cfg.radius <= 0.0) throw std::invalid_argument("tracker: radius must be positive");
  if (cfg.samples < 64) throw std::invalid_argument("tracker: need at least 64 samples");
  if (cfg.tolerance <= 0.0 || cfg.tolerance >= cfg.radius)
    throw std::invalid_argument("tracker: tolerance must lie in (0, radius)");
  if (cfg.max_refinements < 1) throw std::invalid_argument("tracker: max_refinements must be >= 1");
}

}  // namespace

BraidWord local_braid(const LocalCurve& c, const TrackerConfig& cfg) {
  check_config(cfg);
  validate(c);
  BraidWord word = run_tracker(c, cfg);
  if (cfg.validate_half_radius) {
    TrackerConfig half = cfg;
    half.radius = cfg.radius / 2.0;
    half.tolerance = std::min(cfg.tolerance, half.radius / 2.0);
    half.validate_half_radius = false;
    BraidWord again = run_tracker(c, half);
    if (exponent_sum(word) != exponent_sum(again))
      throw std::invalid_argument(
          "local_braid: exponent sum changed between radius and half radius (radius "
          "outside the stable region)");
  }
  return word;
}

BraidWord semilocal_braid(const std::vector<LocalCurve>& curves, const TrackerConfig& cfg) {
  check_config(cfg);
  if (curves.empty()) throw std::invalid_argument("semilocal_braid: no curves");
  for (const auto& c : curves) validate(c);
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (curves[i].center == curves[j].center)
        throw std::invalid_argument("semilocal_braid: centers must be pairwise distinct");

  // Excursion bound: sup over the circle of |y - center|.
  double excursion = 0.0;
  for (const auto& c : curves)
    for (const auto& b : c.branches) {
      double e = 0.0;
      for (const auto& t : b.terms)
        e += std::abs(t.coeff) * std::pow(cfg.radius, t.exponent.value());
      excursion = std::max(excursion, e);
    }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (std::abs(curves[i].center.real() - curves[j].center.real()) < 4.0 * excursion)
        throw std::invalid_argument(
            "semilocal_braid: cluster overlap (centers closer than 4x the maximal strand "
            "excursion in the real direction)");

  std::vector<std::size_t> idx(curves.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&curves](std::size_t a, std::size_t b) {
    return lex_less(curves[a].center, curves[b].center);
  });

  std::vector<BraidWord> parts;
  parts.reserve(curves.size());
  for (std::size_t i : idx) parts.push_back(local_braid(curves[i], cfg));
  return block_embed(parts);
}

QuasihomogeneousDegrees quasihomogeneous_degree_check(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("quasihomogeneous_degree_check: n, m must be >= 1");
  QuasihomogeneousDegrees d;
  d.milnor = static_cast<long long>(n - 1) * (m - 1);
  d.intersection = n;
  d.exponent_sum = static_cast<long long>(n - 1) * m;
  return d;
}

}  // namespace monodromy
