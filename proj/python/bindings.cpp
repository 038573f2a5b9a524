// Python bindings for the core operations: fan builders and IO, sign
// pattern homology, the cohomology engine and the intersection ring.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricoh/chow.hpp"
#include "toricoh/cohomology.hpp"
#include "toricoh/fan_json.hpp"
#include "toricoh/homology.hpp"
#include "toricoh/polyhedron.hpp"
#include "toricoh/smith.hpp"

namespace py = pybind11;
using namespace toricoh;

namespace pybind11::detail {

// Arbitrary-precision integers cross the boundary as Python ints.
template <>
struct type_caster<Int> {
 public:
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    py::object s = py::reinterpret_steal<py::object>(PyObject_Str(src.ptr()));
    if (!s) return false;
    value = Int(std::string(py::str(s)));
    return true;
  }

  static handle cast(const Int& v, return_value_policy, handle) {
    return handle(PyLong_FromString(v.str().c_str(), nullptr, 10));
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<long long>> rays_out(const Fan& fan) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : fan.rays()) {
    std::vector<long long> v;
    for (const Int& e : r) v.push_back(e.convert_to<long long>());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact sheaf cohomology of line bundles on complete simplicial toric varieties";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("smooth", &ValidationReport::smooth)
      .def_readonly("complete", &ValidationReport::complete)
      .def_readonly("diagnostics", &ValidationReport::diagnostics);

  py::class_<Fan>(m, "Fan")
      .def(py::init<std::size_t, std::vector<std::vector<Int>>, std::vector<std::vector<int>>>(),
           py::arg("dimension"), py::arg("rays"), py::arg("max_cones"))
      .def_property_readonly("dimension", &Fan::dimension)
      .def_property_readonly("ray_count", &Fan::ray_count)
      .def_property_readonly("rays", &rays_out)
      .def_property_readonly("max_cones",
                             [](const Fan& f) { return f.max_cones(); })
      .def_property_readonly("validation", &Fan::validation)
      .def("cones_of_dimension", &Fan::cones_of_dimension, py::arg("m"))
      .def("is_verified", &Fan::is_verified)
      .def("to_json", &fan_to_json_string);

  m.def("build_projective_fan", &build_projective_fan, py::arg("n"));
  m.def("build_del_pezzo_fan", &build_del_pezzo_fan, py::arg("n"));
  m.def("fan_from_json", &fan_from_json_string, py::arg("text"));
  m.def("canonical_divisor", &canonical_divisor, py::arg("fan"));

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("pairs", &SymmetryReport::pairs)
      .def_readonly("order", &SymmetryReport::order)
      .def_readonly("hypothesis_met", &SymmetryReport::hypothesis_met);
  m.def("symmetry_report", &symmetry_report, py::arg("fan"));

  py::class_<SignPattern>(m, "SignPattern")
      .def(py::init<std::size_t, std::vector<int>>(), py::arg("ray_count"), py::arg("nonneg"))
      .def_static("from_divisor", &SignPattern::from_divisor, py::arg("divisor"))
      .def_static("from_negative", &SignPattern::from_negative, py::arg("ray_count"),
                  py::arg("negative"))
      .def_property_readonly("nonneg", &SignPattern::nonneg)
      .def_property_readonly("negative", &SignPattern::negative);

  py::class_<SupportComplex>(m, "SupportComplex")
      .def_property_readonly("top_dimension", &SupportComplex::top_dimension)
      .def("faces_of_dimension", &SupportComplex::faces_of_dimension, py::arg("d"))
      .def_property_readonly("maximal_faces", &SupportComplex::maximal_faces);
  m.def("support_complex", &support_complex, py::arg("fan"), py::arg("pattern"));

  py::enum_<CoefficientRing>(m, "CoefficientRing")
      .value("RATIONAL", CoefficientRing::Rational)
      .value("INTEGER", CoefficientRing::Integer)
      .value("MOD2", CoefficientRing::Mod2);

  py::class_<HomologyProfile>(m, "HomologyProfile")
      .def_property_readonly("max_degree", &HomologyProfile::max_degree)
      .def("rank", &HomologyProfile::rank, py::arg("q"))
      .def("torsion", &HomologyProfile::torsion, py::arg("q"))
      .def("reduced_euler", &HomologyProfile::reduced_euler);
  m.def("reduced_homology", &reduced_homology, py::arg("complex"),
        py::arg("ring") = CoefficientRing::Rational);

  py::class_<CycleCheck>(m, "CycleCheck")
      .def_readonly("holds", &CycleCheck::holds)
      .def_readonly("incidence", &CycleCheck::incidence)
      .def_readonly("d_face_count", &CycleCheck::d_face_count);
  m.def("cycle_criterion", &cycle_criterion, py::arg("complex"), py::arg("d"));

  py::class_<PatternAudit>(m, "PatternAudit")
      .def_readonly("negative", &PatternAudit::negative)
      .def_readonly("degree_ranks", &PatternAudit::degree_ranks)
      .def_readonly("points", &PatternAudit::points);

  py::class_<CohomologyTable>(m, "CohomologyTable")
      .def_readonly("h", &CohomologyTable::h)
      .def_readonly("euler", &CohomologyTable::euler)
      .def_readonly("audit", &CohomologyTable::audit);

  py::class_<H1Class>(m, "H1Class")
      .def_readonly("class_coords", &H1Class::class_coords)
      .def_readonly("representative", &H1Class::representative)
      .def_readonly("h1", &H1Class::h1);

  py::class_<PicardPresentation>(m, "PicardPresentation")
      .def_property_readonly("rank", &PicardPresentation::rank)
      .def("class_of", &PicardPresentation::class_of, py::arg("divisor"))
      .def("is_principal", &PicardPresentation::is_principal, py::arg("divisor"))
      .def("representative", &PicardPresentation::representative, py::arg("coords"));

  py::class_<CohomologyEngine>(m, "CohomologyEngine")
      .def(py::init<Fan, std::size_t>(), py::arg("fan"), py::arg("max_rays") = kDefaultMaxRays)
      .def_property_readonly("picard", &CohomologyEngine::picard,
                             py::return_value_policy::reference_internal)
      .def("cohomology", &CohomologyEngine::cohomology, py::arg("divisor"))
      .def("ext_dimension", &CohomologyEngine::ext_dimension, py::arg("l1"), py::arg("l2"))
      .def("search_h1", &CohomologyEngine::search_h1, py::arg("box"));

  m.def("prop43_divisor", &prop43_divisor, py::arg("fan"), py::arg("i"), py::arg("coeffs"));
  m.def("prop43_uniform_divisor", &prop43_uniform_divisor, py::arg("fan"), py::arg("i"),
        py::arg("coeff"));

  py::class_<ChowElement>(m, "ChowElement")
      .def("degree", &ChowElement::degree, py::arg("k"))
      .def("is_zero", &ChowElement::is_zero)
      .def("__add__", &ChowElement::operator+)
      .def("__sub__",
           [](const ChowElement& a, const ChowElement& b) { return a - b; })
      .def("__neg__", [](const ChowElement& a) { return -a; })
      .def("__eq__", &ChowElement::operator==);

  py::class_<ChowRing>(m, "ChowRing")
      .def(py::init<const Fan&>(), py::arg("fan"))
      .def_property_readonly("dimension", &ChowRing::dimension)
      .def("degree_rank", &ChowRing::degree_rank, py::arg("k"))
      .def("basis_faces", &ChowRing::basis_faces, py::arg("k"))
      .def("divisor_class", &ChowRing::divisor_class, py::arg("divisor"))
      .def("class_element", &ChowRing::class_element, py::arg("pic_coords"))
      .def("multiply", &ChowRing::multiply, py::arg("a"), py::arg("b"))
      .def("top_coordinate", &ChowRing::top_coordinate, py::arg("element"))
      .def_property_readonly("picard", &ChowRing::picard,
                             py::return_value_policy::reference_internal);

  m.def("chern_pair", &chern_pair, py::arg("ring"), py::arg("x1_coords"), py::arg("x2_coords"));
  m.def("splitting_candidates", &splitting_candidates, py::arg("ring"), py::arg("d1_coords"),
        py::arg("box"));
  m.def("riemann_roch_chi", &riemann_roch_chi, py::arg("ring"), py::arg("class_coords"));

  py::enum_<Feasibility>(m, "Feasibility")
      .value("EMPTY", Feasibility::Empty)
      .value("BOUNDED", Feasibility::Bounded)
      .value("UNBOUNDED", Feasibility::Unbounded);

  m.def(
      "lattice_points",
      [](std::size_t dimension, const std::vector<std::tuple<std::vector<Int>, Int, std::string>>&
                                    constraints) {
        RationalPolyhedron p;
        p.dimension = dimension;
        for (const auto& [normal, bound, sense] : constraints) {
          if (sense != "<=" && sense != ">=")
            throw DomainError("constraint sense must be '<=' or '>='");
          p.constraints.push_back(
              Constraint{normal, bound, sense == "<=" ? Sense::LessEq : Sense::GreaterEq});
        }
        LatticePointResult r = lattice_points(p);
        return std::make_pair(r.kind, r.points);
      },
      py::arg("dimension"), py::arg("constraints"),
      "integer points of { x : constraints }, as (feasibility, points)");

  m.def("smith_diagonal", [](const std::vector<std::vector<Int>>& rows) {
    return smith_normal_form(IntMatrix::from_rows(rows)).diag;
  });

  m.attr("__version__") = "0.1.0";
}
