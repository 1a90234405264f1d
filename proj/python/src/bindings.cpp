#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbimod/cli.hpp"
#include "orbimod/core.hpp"
#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"
#include "orbimod/ranktwo.hpp"
#include "orbimod/reps.hpp"
#include "orbimod/spectral.hpp"

namespace py = pybind11;
using namespace orbimod;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.numerator(), q.denominator());
}

py::dict spec_dict(const SubBundleSpec& s) {
  py::dict d;
  d["m"] = s.m;
  d["eps"] = s.eps.values();
  return d;
}

py::dict stratum_dict(const Stratum& s) {
  py::dict d = spec_dict(s.spec);
  d["value_over_2pi"] = fraction(s.value_over_2pi);
  d["index"] = s.index;
  d["r"] = s.r;
  d["cover"] = s.cover_order;
  return d;
}

std::vector<IsotropyPair> to_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<IsotropyPair> out;
  for (const auto& [x, xp] : pairs) out.push_back({x, xp});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of orbifold Riemann surfaces and rank-2 Higgs V-bundle moduli";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<OrbifoldSurface>(m, "OrbifoldSurface")
      .def(py::init<int, std::vector<int>>(), py::arg("genus"), py::arg("alphas"))
      .def_property_readonly("genus", &OrbifoldSurface::genus)
      .def_property_readonly("alphas", &OrbifoldSurface::cone_orders)
      .def_property_readonly("euler_characteristic",
                             [](const OrbifoldSurface& s) { return fraction(s.euler_characteristic()); })
      .def_property_readonly("hyperbolic", &OrbifoldSurface::hyperbolic)
      .def("__eq__", [](const OrbifoldSurface& a, const OrbifoldSurface& b) { return a == b; })
      .def("__repr__", [](const OrbifoldSurface& s) {
        return "OrbifoldSurface(genus=" + std::to_string(s.genus()) + ", alphas=" +
               py::repr(py::cast(s.cone_orders())).cast<std::string>() + ")";
      });

  py::class_<LineVBundle>(m, "LineVBundle")
      .def(py::init<OrbifoldSurface, std::int64_t, std::vector<int>>(), py::arg("surface"), py::arg("b"), py::arg("y"))
      .def_property_readonly("surface", &LineVBundle::surface)
      .def_property_readonly("b", &LineVBundle::b)
      .def_property_readonly("y", py::overload_cast<>(&LineVBundle::y, py::const_))
      .def_property_readonly("c1", [](const LineVBundle& l) { return fraction(l.c1()); })
      .def("is_trivial", &LineVBundle::is_trivial)
      .def("__eq__", [](const LineVBundle& a, const LineVBundle& b) { return a == b; })
      .def("__repr__", [](const LineVBundle& l) {
        return "LineVBundle(b=" + std::to_string(l.b()) + ", y=" + py::repr(py::cast(l.y())).cast<std::string>() + ")";
      });

  m.def("canonical_bundle", &canonical_bundle, py::arg("surface"));
  m.def("point_bundle", &point_bundle, py::arg("surface"), py::arg("i"));
  m.def("tensor", &tensor);
  m.def("dual", &dual);
  m.def("power", &power, py::arg("line"), py::arg("k"));
  m.def("chi_line", &chi_line);
  m.def("serre_partner", &serre_partner);
  m.def("smooth_line_bundle", &smooth_line_bundle);
  m.def("h0_forced", [](const LineVBundle& l) {
    const auto h = h0_forced(l);
    return py::make_tuple(to_string(h.kind), h.kind == ForcedH0::Kind::Known ? py::cast(h.value) : py::none());
  });

  py::class_<RankTwoVBundle>(m, "RankTwoVBundle")
      .def(py::init([](const OrbifoldSurface& s, const std::vector<std::pair<int, int>>& pairs, std::int64_t l) {
             return RankTwoVBundle(s, to_pairs(pairs), l);
           }),
           py::arg("surface"), py::arg("pairs"), py::arg("l"))
      .def_property_readonly("surface", &RankTwoVBundle::surface)
      .def_property_readonly("l", &RankTwoVBundle::l)
      .def_property_readonly("n0", &RankTwoVBundle::n0)
      .def_property_readonly("pairs",
                             [](const RankTwoVBundle& e) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& p : e.pairs()) out.emplace_back(p.x, p.x_prime);
                               return out;
                             })
      .def_property_readonly("determinant", &RankTwoVBundle::determinant)
      .def_property_readonly("det_degree", [](const RankTwoVBundle& e) { return fraction(e.det_degree()); });

  m.def("moduli_dimension", &moduli_dimension);
  m.def("hitchin_base_dim", &hitchin_base_dim);
  m.def("reducible_exists", [](const RankTwoVBundle& e) -> py::object {
    const auto w = reducible_exists(e);
    return w ? py::object(spec_dict(*w)) : py::none();
  });
  m.def("chi_twists", [](const RankTwoVBundle& e, std::int64_t mm, const std::vector<int>& eps) {
    return chi_twists(e, {mm, IsotropyVector(eps)});
  }, py::arg("bundle"), py::arg("m"), py::arg("eps"));
  m.def("squarefree_normalize", &squarefree_normalize);
  m.def("topological_roots", &topological_roots);

  m.def("enumerate_strata", [](const RankTwoVBundle& e) {
    py::list out;
    for (const auto& s : enumerate_strata(e)) out.append(stratum_dict(s));
    return out;
  });
  m.def("poincare_coefficients", [](const RankTwoVBundle& e) -> py::object {
    const auto p = poincare_polynomial(e);
    if (p.is_symbolic()) return py::none();
    return py::cast(p.coeffs());
  }, "Integer Poincare coefficients, or None when symbolic terms remain");
  m.def("poincare_text", [](const RankTwoVBundle& e) { return poincare_polynomial(e).to_string(); });
  m.def("euler_characteristic_moduli", &euler_characteristic_moduli, py::arg("bundle"),
        py::arg("chi_min") = std::nullopt);

  m.def("spectral_data", [](const RankTwoVBundle& e) {
    const auto d = spectral_data(e);
    py::dict out;
    out["base_dim"] = d.base_dim;
    out["branch_points"] = d.branch_points;
    out["spectral_genus"] = d.spectral_genus;
    out["fibre"] = to_string(d.fibre);
    out["fibre_dim"] = d.fibre_dim;
    out["generic_caveat"] = d.generic_caveat;
    return out;
  });

  m.def("teichmuller_dimension", &teichmuller_dimension);
  m.def("milnor_wood", [](const OrbifoldSurface& s, py::object e) {
    const auto num = e.attr("numerator").cast<std::int64_t>();
    const auto den = e.attr("denominator").cast<std::int64_t>();
    return milnor_wood(s, Rational(num, den));
  }, py::arg("surface"), py::arg("euler_class"));
  m.def("fuchsian_presentation", [](const OrbifoldSurface& s) { return fuchsian_presentation(s).to_string(); });
  m.def("compatible_rotation_numbers", [](const LineVBundle& lambda) {
    std::vector<std::vector<int>> out;
    for (const auto& rd : compatible_rotation_numbers(lambda)) out.push_back(rd.r());
    return out;
  });

  m.def("run", [](const std::string& command, const std::string& document, const std::string& format) {
    RunResult r;
    {
      py::gil_scoped_release release;
      r = run_command(command, document, format);
    }
    return py::make_tuple(r.exit_code, r.output, r.error);
  }, py::arg("command"), py::arg("document") = "", py::arg("format") = "json",
        "Run a CLI command on a JSON document; returns (exit_code, stdout, stderr)");
}
