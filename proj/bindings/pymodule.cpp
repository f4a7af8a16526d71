// Python surface for the verification pipelines. Reports cross the boundary
// as JSON strings; the helpers below parse them into plain dicts so smoke
// tests can poke at fields without a C++ toolchain in the loop.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinver/errors.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/report.hpp"

namespace py = pybind11;

namespace {

spinver::Field make_field(std::uint64_t prime) {
  return prime == 0 ? spinver::Field::rational()
                    : spinver::Field::prime(prime);
}

// Runs one pipeline trial; prime 0 selects the rationals.
std::string report_json(const std::string& name, std::uint64_t prime,
                        std::uint64_t seed, std::size_t cap) {
  spinver::Field f = make_field(prime);
  return spinver::report_to_json(spinver::run_pipeline(name, f, seed, cap))
      .dump();
}

py::dict to_dict(const std::string& json_text) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(json_text);
}

}  // namespace

PYBIND11_MODULE(pyspinver, m) {
  m.doc() = "exact verification pipelines for low-genus spin curve "
            "constructions";

  m.def("pipelines", []() {
    std::vector<std::string> names;
    for (const auto& spec : spinver::pipeline_registry())
      names.push_back(spec.name);
    return names;
  });

  m.def(
      "run",
      [](const std::string& name, std::uint64_t prime, std::uint64_t seed,
         std::size_t cap) { return to_dict(report_json(name, prime, seed, cap)); },
      py::arg("name"), py::arg("prime") = 10007, py::arg("seed") = 1,
      py::arg("cap") = spinver::kDefaultResampleCap,
      "Run one pipeline trial and return the report as a dict. prime=0 "
      "selects the rationals.");

  m.def(
      "run_json",
      [](const std::string& name, std::uint64_t prime, std::uint64_t seed,
         std::size_t cap) { return report_json(name, prime, seed, cap); },
      py::arg("name"), py::arg("prime") = 10007, py::arg("seed") = 1,
      py::arg("cap") = spinver::kDefaultResampleCap,
      "Same as run(), returning the raw JSON text.");

  py::register_exception<spinver::error>(m, "SpinverError");
}
