#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieon/json_io.hpp"
#include "lieon/modular.hpp"
#include "lieon/multivec.hpp"

namespace py = pybind11;
using namespace lieon;

// Every entry point takes and returns JSON text in the command line tool's formats.
namespace {

StructureConstants structure(const std::string& text) { return structure_from_json(parse_json_text(text)); }

ClassicalPreset preset(const std::string& family, std::size_t n, const std::vector<std::string>& params) {
  ClassicalPreset p{parse_family(family), n, {}};
  for (const auto& s : params) p.params.push_back(parse_scalar(s));
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<NotLieError>(m, "NotLieError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("is_lie", [](const std::string& a) { return satisfies_jacobi(structure(a)); });
  m.def("classify", [](const std::string& a) { return dump_json(to_json(classify_lieon(structure(a)))); });
  m.def("compatible", [](const std::string& a, const std::string& b) {
    return compatible(LieAlgebra(structure(a)), LieAlgebra(structure(b)));
  });
  m.def("schouten", [](const std::string& a, const std::string& b) {
    return schouten(lie_to_bivector(structure(a)), lie_to_bivector(structure(b))).to_string();
  });
  m.def("lie_rank", [](const std::string& a) { return lie_rank(LieAlgebra(structure(a))); });
  m.def("modular_vector", [](const std::string& a) { return dump_json(to_json(modular_vector(LieAlgebra(structure(a))))); });
  m.def("modular_disassemble", [](const std::string& a) {
    ModularSplit sp = modular_disassemble(LieAlgebra(structure(a)));
    Json j{{"unimodular", to_json(sp.uni.sc())},
           {"non_unimodular", to_json(sp.non.sc())},
           {"theta", to_json(sp.triple.theta)},
           {"nu", to_json(sp.triple.nu)}};
    return dump_json(j);
  });
  m.def("disassemble_solvable", [](const std::string& a) {
    return dump_json(to_json(disassemble_solvable(LieAlgebra(structure(a)))));
  });
  m.def("verify_scheme", [](const std::string& s) {
    return dump_json(to_json(verify_scheme(scheme_from_json(parse_json_text(s)))));
  });
  m.def("census", [](const std::string& s) {
    return dump_json(to_json(lieon_census(scheme_from_json(parse_json_text(s)))));
  });
  m.def("build_algebra", [](const std::string& family, std::size_t n, const std::vector<std::string>& params) {
    return dump_json(to_json(build_algebra(preset(family, n, params)).sc()));
  }, py::arg("family"), py::arg("n"), py::arg("params") = std::vector<std::string>{});
  m.def("classical", [](const std::string& family, std::size_t n, const std::vector<std::string>& params) {
    return dump_json(to_json(disassemble(preset(family, n, params))));
  }, py::arg("family"), py::arg("n"), py::arg("params") = std::vector<std::string>{});
}
