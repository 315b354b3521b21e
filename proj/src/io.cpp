#include "monodromy/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace monodromy::io {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& tok, const std::string& name, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(name, line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size()) fail(name, line, "expected an integer, got '" + tok + "'");
  return v;
}

double parse_dbl(const std::string& tok, const std::string& name, int line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    fail(name, line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size()) fail(name, line, "expected a number, got '" + tok + "'");
  return v;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::vector<int> parse_int_word(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : tokens_of(text)) {
    long long v = parse_ll(tok, "<word>", 1);
    if (v == 0) throw std::runtime_error("word letters must be nonzero integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string format_int_word(const std::vector<int>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::runtime_error("expected an exact fraction num/den, got '" + text + "'");
  long long num = parse_ll(text.substr(0, slash), "<fraction>", 1);
  long long den = parse_ll(text.substr(slash + 1), "<fraction>", 1);
  if (den <= 0) throw std::runtime_error("fraction denominator must be positive");
  return Rational(num, den);
}

Factorization read_factorization(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  int strands = 0;
  bool have_n = false;
  std::vector<BraidWord> factors;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (have_n) fail(name, lineno, "duplicate 'n' line");
      if (toks.size() != 2) fail(name, lineno, "expected 'n <int>'");
      strands = static_cast<int>(parse_ll(toks[1], name, lineno));
      if (strands < 1) fail(name, lineno, "strand count must be >= 1");
      have_n = true;
    } else if (toks[0] == "factor") {
      if (!have_n) fail(name, lineno, "'factor' before 'n' line");
      std::vector<int> letters;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        long long v = parse_ll(toks[i], name, lineno);
        if (v == 0 || std::llabs(v) > strands - 1)
          fail(name, lineno, "letter " + toks[i] + " out of range for " +
                                 std::to_string(strands) + " strands");
        letters.push_back(static_cast<int>(v));
      }
      factors.emplace_back(strands, std::move(letters));
    } else {
      fail(name, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_n) fail(name, lineno ? lineno : 1, "missing 'n' line");
  return Factorization(strands, std::move(factors));
}

Factorization read_factorization_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  return read_factorization(in, path);
}

std::string write_factorization(const Factorization& f) {
  std::string out = "n " + std::to_string(f.strands) + "\n";
  for (const auto& t : f.factors) {
    out += "factor";
    for (int k : t.letters) out += ' ' + std::to_string(k);
    out += '\n';
  }
  return out;
}

std::vector<LocalCurve> read_curves(std::istream& in, const std::string& name) {
  std::vector<LocalCurve> curves;
  std::string line;
  int lineno = 0;
  bool have_curve = false;
  bool have_branch = false;
  auto current_curve = [&]() -> LocalCurve& {
    if (!have_curve) {
      curves.emplace_back();
      have_curve = true;
    }
    return curves.back();
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "center") {
      if (toks.size() != 3) fail(name, lineno, "expected 'center <re> <im>'");
      LocalCurve c;
      c.center = {parse_dbl(toks[1], name, lineno), parse_dbl(toks[2], name, lineno)};
      curves.push_back(c);
      have_curve = true;
      have_branch = false;
    } else if (toks[0] == "branch") {
      if (toks.size() != 2 || toks[1].rfind("m=", 0) != 0)
        fail(name, lineno, "expected 'branch m=<int>'");
      long long m = parse_ll(toks[1].substr(2), name, lineno);
      if (m < 1) fail(name, lineno, "branch multiplicity must be >= 1");
      PuiseuxBranch b;
      b.multiplicity = static_cast<int>(m);
      current_curve().branches.push_back(std::move(b));
      have_branch = true;
    } else if (toks[0] == "term") {
      if (!have_branch) fail(name, lineno, "'term' before any 'branch' line");
      if (toks.size() != 4) fail(name, lineno, "expected 'term <num>/<den> <re> <im>'");
      PuiseuxTerm t;
      try {
        t.exponent = parse_rational(toks[1]);
      } catch (const std::exception& e) {
        fail(name, lineno, e.what());
      }
      t.coeff = {parse_dbl(toks[2], name, lineno), parse_dbl(toks[3], name, lineno)};
      current_curve().branches.back().terms.push_back(t);
    } else {
      fail(name, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (curves.empty()) fail(name, lineno ? lineno : 1, "no curves in file");
  for (const auto& c : curves)
    if (c.branches.empty()) fail(name, lineno, "curve without branches");
  return curves;
}

std::vector<LocalCurve> read_curves_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  return read_curves(in, path);
}

std::string write_curves(const std::vector<LocalCurve>& curves) {
  std::string out;
  for (const auto& c : curves) {
    out += "center " + format_double(c.center.real()) + ' ' + format_double(c.center.imag()) +
           '\n';
    for (const auto& b : c.branches) {
      out += "branch m=" + std::to_string(b.multiplicity) + '\n';
      for (const auto& t : b.terms)
        out += "term " + format_rational(t.exponent) + ' ' + format_double(t.coeff.real()) +
               ' ' + format_double(t.coeff.imag()) + '\n';
    }
  }
  return out;
}

std::string write_presentation(const Presentation& p) {
  std::vector<std::vector<int>> rels;
  rels.reserve(p.relators.size());
  for (const auto& r : p.relators) rels.push_back(r.letters);
  std::sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::string out = "gens " + std::to_string(p.generators) + "\n";
  for (const auto& r : rels) {
    out += "rel";
    for (int k : r) out += ' ' + std::to_string(k);
    out += '\n';
  }
  return out;
}

std::string write_abelian(const AbelianInvariants& a) {
  std::string out = "rank " + std::to_string(a.free_rank) + " torsion [";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) {
    if (i) out += ',';
    out += a.torsion[i].get_str();
  }
  out += "]";
  return out;
}

}  // namespace monodromy::io
