#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monodromy/io.hpp"

namespace py = pybind11;
using namespace monodromy;

namespace {

py::object mpz_to_int(const mpz_class& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object rational_to_fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.num, r.den);
}

Rational rational_from_pair(long long num, long long den) { return Rational(num, den); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid monodromy toolkit: braid words, the braid action on free groups, "
            "Zariski-van Kampen presentations and local braids of curve germs.";

  py::class_<Permutation>(m, "Permutation")
      .def_readonly("images", &Permutation::images)
      .def("apply", &Permutation::apply)
      .def("cycle_type", &Permutation::cycle_type)
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__repr__", [](const Permutation& p) {
        std::ostringstream ss;
        ss << "Permutation([";
        for (std::size_t i = 0; i < p.images.size(); ++i)
          ss << (i ? ", " : "") << p.images[i];
        ss << "])";
        return ss.str();
      });

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__len__", &BraidWord::size)
      .def("__repr__", [](const BraidWord& b) {
        return "BraidWord(" + std::to_string(b.strands) + ", [" +
               io::format_int_word(b.letters) + "])";
      });

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init<int, std::vector<int>>(), py::arg("rank"), py::arg("letters"))
      .def_readonly("rank", &FreeWord::rank)
      .def_readonly("letters", &FreeWord::letters)
      .def("__eq__", [](const FreeWord& a, const FreeWord& b) { return a == b; })
      .def("__repr__", [](const FreeWord& w) {
        return "FreeWord(" + std::to_string(w.rank) + ", [" + io::format_int_word(w.letters) +
               "])";
      });

  py::class_<GeometricTuple>(m, "GeometricTuple")
      .def(py::init<int, std::vector<FreeWord>>(), py::arg("rank"), py::arg("entries"))
      .def_readonly("rank", &GeometricTuple::rank)
      .def_readonly("entries", &GeometricTuple::entries);

  // braid_core
  m.def("compose", &compose);
  m.def("inverse", py::overload_cast<const BraidWord&>(&inverse));
  m.def("inverse", py::overload_cast<const FreeWord&>(&inverse));
  m.def("conjugate", &conjugate, py::arg("a"), py::arg("g"));
  m.def("permutation_of", &permutation_of);
  m.def("exponent_sum", &exponent_sum);
  m.def("is_syntactically_positive", &is_syntactically_positive);
  m.def("full_twist", &full_twist);
  m.def("block_embed", &block_embed);
  m.def("braid_equal", &braid_equal);
  m.def("conjugacy_search", &conjugacy_search, py::arg("a"), py::arg("b"), py::arg("max_len"));

  // free_group
  m.def("reduce", [](int rank, std::vector<int> letters) {
    return reduce(rank, std::move(letters));
  });
  m.def("concat", &concat);
  m.def("delta_word", &delta_word);
  m.def("act", py::overload_cast<const FreeWord&, const BraidWord&>(&act));
  m.def("act", py::overload_cast<const GeometricTuple&, const BraidWord&>(&act));
  m.def("is_meridian_of", &is_meridian_of);
  m.def("standard_tuple", &standard_tuple);
  m.def("nielsen_is_basis", &nielsen_is_basis);
  m.def("is_geometric", &is_geometric);
  m.def("find_braid", &find_braid, py::arg("tuple"), py::arg("max_len"));

  // factorization
  py::class_<Factorization>(m, "Factorization")
      .def(py::init<int, std::vector<BraidWord>>(), py::arg("strands"), py::arg("factors"))
      .def_readonly("strands", &Factorization::strands)
      .def_readonly("factors", &Factorization::factors)
      .def("__len__", &Factorization::size);

  py::class_<PuiseuxBlock>(m, "PuiseuxBlock")
      .def(py::init([](int start, int width, BraidWord beta) {
             return PuiseuxBlock{start, width, std::move(beta)};
           }),
           py::arg("start"), py::arg("width"), py::arg("beta"))
      .def_readonly("start", &PuiseuxBlock::start)
      .def_readonly("width", &PuiseuxBlock::width)
      .def_readonly("beta", &PuiseuxBlock::beta);

  py::class_<BlockedPuiseuxFactor>(m, "BlockedPuiseuxFactor")
      .def(py::init([](BraidWord alpha, std::vector<PuiseuxBlock> blocks) {
             return BlockedPuiseuxFactor{std::move(alpha), std::move(blocks)};
           }),
           py::arg("alpha"), py::arg("blocks"))
      .def_readonly("alpha", &BlockedPuiseuxFactor::alpha)
      .def_readonly("blocks", &BlockedPuiseuxFactor::blocks);

  py::class_<PuiseuxFactorization>(m, "PuiseuxFactorization")
      .def(py::init([](int strands, std::vector<BlockedPuiseuxFactor> entries) {
             PuiseuxFactorization p{strands, std::move(entries)};
             validate(p);
             return p;
           }),
           py::arg("strands"), py::arg("entries"))
      .def_readonly("strands", &PuiseuxFactorization::strands)
      .def_readonly("entries", &PuiseuxFactorization::entries);

  m.def("expand", &expand);
  m.def("pseudo_coxeter", &pseudo_coxeter);
  m.def("is_projective", &is_projective);
  m.def("hurwitz_move", &hurwitz_move);
  m.def("hurwitz_move_inverse", &hurwitz_move_inverse);
  m.def("global_conjugate", &global_conjugate);
  m.def("perm_monodromy_order", &perm_monodromy_order);
  m.def("orbit_count_components", &orbit_count_components);
  m.def("hurwitz_orbit", [](const Factorization& f, std::size_t max_states) {
    HurwitzOrbit orbit = hurwitz_orbit(f, max_states);
    return py::make_tuple(orbit.states, orbit.complete);
  });
  m.def("same_orbit",
        [](const Factorization& a, const Factorization& b, std::size_t max_states,
           int conj_len) {
          SameOrbitResult res = same_orbit(a, b, max_states, conj_len);
          return py::make_tuple(std::string(to_string(res.relation)), res.reason);
        },
        py::arg("f1"), py::arg("f2"), py::arg("max_states") = 2000, py::arg("conj_len") = 3);

  // presentation
  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](int generators, std::vector<FreeWord> relators) {
             Presentation p(generators);
             for (auto& r : relators) p.add_relator(std::move(r));
             return p;
           }),
           py::arg("generators"), py::arg("relators"))
      .def_readonly("generators", &Presentation::generators)
      .def_readonly("relators", &Presentation::relators);

  py::class_<FinitePermGroup>(m, "FinitePermGroup")
      .def_static("symmetric", &FinitePermGroup::symmetric)
      .def_static("from_generators", &FinitePermGroup::from_generators)
      .def_readonly("degree", &FinitePermGroup::degree)
      .def("order", &FinitePermGroup::order);

  m.def("zvk_affine", &zvk_affine, py::arg("f"), py::arg("include_last") = false);
  m.def("zvk_projective", &zvk_projective, py::arg("f"), py::arg("include_last") = false);
  m.def("zvk_puiseux", &zvk_puiseux);
  m.def("tietze_simplify", &tietze_simplify, py::arg("p"), py::arg("budget") = 1000);
  m.def("abelianize", [](const Presentation& p) {
    AbelianInvariants inv = abelianize(p);
    py::list torsion;
    for (const auto& t : inv.torsion) torsion.append(mpz_to_int(t));
    return py::make_tuple(inv.free_rank, torsion);
  });
  m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<mpz_class>> m2;
    for (const auto& row : rows) {
      std::vector<mpz_class> r;
      for (long long v : row) r.emplace_back(static_cast<long>(v));
      m2.push_back(std::move(r));
    }
    py::list out;
    for (const auto& d : smith_normal_form(std::move(m2))) out.append(mpz_to_int(d));
    return out;
  });
  m.def("count_homs", &count_homs, py::arg("p"), py::arg("target"),
        py::arg("nonabelian_only") = false, py::arg("threads") = 1);

  // puiseux_local
  py::class_<Rational>(m, "Rational")
      .def(py::init(&rational_from_pair), py::arg("num"), py::arg("den") = 1)
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("as_fraction", &rational_to_fraction)
      .def("__repr__", [](const Rational& r) { return io::format_rational(r); });

  py::class_<PuiseuxTerm>(m, "PuiseuxTerm")
      .def(py::init([](const Rational& e, std::complex<double> c) {
             return PuiseuxTerm{e, c};
           }),
           py::arg("exponent"), py::arg("coeff"))
      .def_readonly("exponent", &PuiseuxTerm::exponent)
      .def_readonly("coeff", &PuiseuxTerm::coeff);

  py::class_<PuiseuxBranch>(m, "PuiseuxBranch")
      .def(py::init([](int multiplicity, std::vector<PuiseuxTerm> terms) {
             return PuiseuxBranch{multiplicity, std::move(terms)};
           }),
           py::arg("multiplicity"), py::arg("terms"))
      .def_readonly("multiplicity", &PuiseuxBranch::multiplicity)
      .def_readonly("terms", &PuiseuxBranch::terms);

  py::class_<LocalCurve>(m, "LocalCurve")
      .def(py::init([](std::vector<PuiseuxBranch> branches, std::complex<double> center) {
             return LocalCurve{std::move(branches), center};
           }),
           py::arg("branches"), py::arg("center") = std::complex<double>(0, 0))
      .def_readonly("branches", &LocalCurve::branches)
      .def_readonly("center", &LocalCurve::center)
      .def("strand_count", &LocalCurve::strand_count);

  py::class_<TrackerConfig>(m, "TrackerConfig")
      .def(py::init<>())
      .def_readwrite("radius", &TrackerConfig::radius)
      .def_readwrite("samples", &TrackerConfig::samples)
      .def_readwrite("tolerance", &TrackerConfig::tolerance)
      .def_readwrite("max_refinements", &TrackerConfig::max_refinements)
      .def_readwrite("validate_half_radius", &TrackerConfig::validate_half_radius);

  m.def("nu_x", &nu_x);
  m.def("characteristic_exponents", &characteristic_exponents);
  m.def("coincidence_exponent", &coincidence_exponent);
  m.def("essential_truncation", &essential_truncation);
  m.def("local_braid", &local_braid, py::arg("curve"), py::arg("config") = TrackerConfig());
  m.def("semilocal_braid", &semilocal_braid, py::arg("curves"),
        py::arg("config") = TrackerConfig());
  m.def("quasihomogeneous_degree_check", [](int n, int mm) {
    QuasihomogeneousDegrees d = quasihomogeneous_degree_check(n, mm);
    py::dict out;
    out["exponent_sum"] = d.exponent_sum;
    out["milnor"] = d.milnor;
    out["intersection"] = d.intersection;
    return out;
  });

  // text formats
  m.def("parse_factorization", [](const std::string& text) {
    std::istringstream in(text);
    return io::read_factorization(in);
  });
  m.def("format_factorization", &io::write_factorization);
  m.def("parse_curves", [](const std::string& text) {
    std::istringstream in(text);
    return io::read_curves(in);
  });
  m.def("format_curves", &io::write_curves);
  m.def("format_presentation", &io::write_presentation);
}
