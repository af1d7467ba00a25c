// Python bindings. Reports cross the boundary as JSON text; the package
// __init__ decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "rla/error.hpp"
#include "rla/families.hpp"
#include "rla/harness.hpp"
#include "rla/io.hpp"
#include "rla/lattice.hpp"
#include "rla/structure.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

rla::LatticeMode lattice_mode(const std::string& mode) {
  if (mode == "restricted") return rla::LatticeMode::restricted;
  if (mode == "ordinary") return rla::LatticeMode::ordinary;
  throw rla::Error(rla::ErrorKind::BadParameters, "mode must be 'restricted' or 'ordinary'");
}

void check_length(const rla::RestrictedLieAlgebra& L, const rla::Vector& x) {
  if (x.size() != L.dim())
    throw rla::Error(rla::ErrorKind::BadParameters, "expected " + std::to_string(L.dim()) + " coordinates");
  for (auto c : x)
    if (!L.field().contains(c)) throw rla::Error(rla::ErrorKind::BadParameters, "coordinate outside the field");
}

std::string with_header(const std::string& kind, ordered_json body) {
  ordered_json j;
  j["schema_version"] = rla::kSchemaVersion;
  j["kind"] = kind;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_rla, m) {
  m.doc() = "Restricted Lie algebras over finite fields";

  static py::exception<rla::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const rla::Error& e) {
      const auto cls = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = cls(e.what());
      exc.attr("kind") = rla::to_string(e.kind());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  m.attr("DEFAULT_BUDGET") = rla::kDefaultBudget;
  m.attr("SCHEMA_VERSION") = rla::kSchemaVersion;

  py::class_<rla::RestrictedLieAlgebra>(m, "Algebra")
      .def_static("parse", &rla::parse_algebra, py::arg("text"))
      .def("serialize", &rla::serialize_algebra)
      .def_property_readonly("dim", &rla::RestrictedLieAlgebra::dim)
      .def_property_readonly("p", [](const rla::RestrictedLieAlgebra& L) { return L.field().characteristic(); })
      .def_property_readonly("k", [](const rla::RestrictedLieAlgebra& L) { return L.field().degree(); })
      .def_property_readonly("names", &rla::RestrictedLieAlgebra::names)
      .def(
          "bracket",
          [](const rla::RestrictedLieAlgebra& L, const rla::Vector& x, const rla::Vector& y) {
            check_length(L, x);
            check_length(L, y);
            return L.bracket(x, y);
          },
          py::arg("x"), py::arg("y"))
      .def(
          "p_power",
          [](const rla::RestrictedLieAlgebra& L, const rla::Vector& x, std::size_t times) {
            check_length(L, x);
            return L.p_power(x, times);
          },
          py::arg("x"), py::arg("times") = 1)
      .def("__eq__", [](const rla::RestrictedLieAlgebra& a, const rla::RestrictedLieAlgebra& b) { return a == b; })
      .def("__repr__", [](const rla::RestrictedLieAlgebra& L) {
        return "<Algebra dim=" + std::to_string(L.dim()) + " over GF(" + std::to_string(L.field().order()) + ")>";
      });

  m.def(
      "generate",
      [](const std::string& family, std::uint32_t p, std::uint32_t k, std::size_t n, std::size_t mm,
         const std::string& pmap, const std::vector<rla::Vector>& polys, bool x_to_z, bool y_to_z, bool z_to_z) {
        rla::FamilySpec spec;
        spec.family = family;
        spec.p = p;
        spec.k = k;
        spec.n = n;
        spec.m = mm;
        if (pmap == "toral") spec.pmap = rla::AbelianPmap::toral;
        else if (pmap != "zero") throw rla::Error(rla::ErrorKind::BadParameters, "pmap must be 'zero' or 'toral'");
        spec.polys = polys;
        spec.x_to_z = x_to_z;
        spec.y_to_z = y_to_z;
        spec.z_to_z = z_to_z;
        return rla::generate(spec);
      },
      py::arg("family"), py::arg("p"), py::arg("k") = 1, py::arg("n") = 1, py::arg("m") = 1,
      py::arg("pmap") = "zero", py::arg("polys") = std::vector<rla::Vector>{}, py::arg("x_to_z") = false,
      py::arg("y_to_z") = false, py::arg("z_to_z") = false);
  m.def("family_names", &rla::family_names);

  m.def("_validate", [](const rla::RestrictedLieAlgebra& L) {
    return with_header("validation", {{"validation", rla::validation_to_json(rla::validate(L))}});
  });
  m.def(
      "_structure",
      [](const rla::RestrictedLieAlgebra& L, std::uint64_t budget) {
        py::gil_scoped_release release;
        return with_header("analysis", {{"structure", rla::structure_report(L, budget)}});
      },
      py::arg("algebra"), py::arg("budget") = rla::kDefaultBudget);
  m.def(
      "_lattice",
      [](const rla::RestrictedLieAlgebra& L, const std::string& mode, std::uint64_t budget) {
        const auto m = lattice_mode(mode);
        py::gil_scoped_release release;
        const auto lat = rla::SubalgebraLattice::enumerate(L, m, budget);
        return with_header("lattice", rla::lattice_report(lat));
      },
      py::arg("algebra"), py::arg("mode") = "restricted", py::arg("budget") = rla::kDefaultBudget);
  m.def(
      "lattice_dot",
      [](const rla::RestrictedLieAlgebra& L, const std::string& mode, std::uint64_t budget) {
        return rla::to_dot(rla::SubalgebraLattice::enumerate(L, lattice_mode(mode), budget));
      },
      py::arg("algebra"), py::arg("mode") = "restricted", py::arg("budget") = rla::kDefaultBudget);
  m.def(
      "jordan_chevalley",
      [](const rla::RestrictedLieAlgebra& L, const rla::Vector& x) {
        check_length(L, x);
        const auto jc = rla::jordan_chevalley(L, x);
        return py::make_tuple(jc.semisimple, jc.nilpotent);
      },
      py::arg("algebra"), py::arg("x"));
  m.def(
      "_check",
      [](const rla::RestrictedLieAlgebra& L, const std::string& theorem, std::uint64_t budget) {
        py::gil_scoped_release release;
        return rla::to_json(rla::check_instance(L, theorem, budget)).dump();
      },
      py::arg("algebra"), py::arg("theorem"), py::arg("budget") = rla::kDefaultBudget);
  m.def("_theorem_catalog", [] {
    ordered_json j = ordered_json::array();
    for (const auto& t : rla::theorem_catalog())
      j.push_back({{"id", t.id},
                   {"name", t.name},
                   {"field", rla::to_string(t.field)},
                   {"char_constraint", t.char_constraint},
                   {"structural", t.structural},
                   {"mode", rla::to_string(t.mode)},
                   {"statement", t.statement}});
    return j.dump();
  });
  m.def("_default_corpus_config", [] { return rla::to_json(rla::default_corpus_config()).dump(); });
  m.def(
      "_run_corpus",
      [](const std::string& config) {
        const auto c = rla::corpus_config_from_json(ordered_json::parse(config));
        py::gil_scoped_release release;
        return rla::run_corpus(c).json.dump();
      },
      py::arg("config"));
}
