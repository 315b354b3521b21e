#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monodromy/factorization.hpp"
#include "monodromy/presentation.hpp"
#include "monodromy/puiseux.hpp"

namespace monodromy::io {

// Whitespace-separated nonzero decimal integers, e.g. "1 -2 1".
std::vector<int> parse_int_word(const std::string& text);
std::string format_int_word(const std::vector<int>& letters);

// Deterministic float form with 12 significant digits.
std::string format_double(double v);

std::string format_rational(const Rational& r);  // always "num/den"
Rational parse_rational(const std::string& text);

// Factorization file: '#' comments, a "n <int>" line, then one
// "factor <ints...>" line per factor. Canonical output is byte-stable.
Factorization read_factorization(std::istream& in, const std::string& name = "<input>");
Factorization read_factorization_file(const std::string& path);
std::string write_factorization(const Factorization& f);

// Curve file: optional "center <re> <im>" opens a curve, then
// "branch m=<int>" and "term <num>/<den> <re> <im>" lines. Several curves
// per file are allowed (one per center line).
std::vector<LocalCurve> read_curves(std::istream& in, const std::string& name = "<input>");
std::vector<LocalCurve> read_curves_file(const std::string& path);
std::string write_curves(const std::vector<LocalCurve>& curves);

// "gens <g>" then "rel <ints...>" lines, relators sorted by length then
// lexicographically.
std::string write_presentation(const Presentation& p);

std::string write_abelian(const AbelianInvariants& a);

}  // namespace monodromy::io
