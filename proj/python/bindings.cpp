#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "degloci/error.hpp"
#include "degloci/scenario.hpp"

namespace py = pybind11;
using namespace degloci;

namespace {

// RingPtr points to const, which pybind11 cannot hold directly.
struct Ring {
  RingPtr ptr;
};

Ring make_ring(std::uint32_t characteristic, const std::vector<std::string>& vars, const std::string& order) {
  Field f = characteristic == 0 ? Field::rationals() : Field::prime(characteristic);
  return {PolyRing::make(f, vars, parse_order_kind(order))};
}

PolyVector parse_all(const RingPtr& r, const std::vector<std::string>& gens) {
  PolyVector out;
  for (const auto& g : gens) out.push_back(Polynomial::parse(r, g));
  return out;
}

std::vector<std::string> print_all(const PolyVector& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

PolyMatrix parse_matrix(const RingPtr& r, const std::vector<std::vector<std::string>>& rows) {
  std::vector<PolyVector> parsed;
  for (const auto& row : rows) parsed.push_back(parse_all(r, row));
  return PolyMatrix(r, parsed);
}

ScenarioOptions options(std::optional<std::uint32_t> characteristic, std::optional<std::uint64_t> seed) {
  ScenarioOptions o;
  o.characteristic = characteristic;
  o.seed = seed;
  return o;
}

std::string render(const Report& r, const std::string& format) { return format == "text" ? r.text() : r.jsonl(); }

}  // namespace

PYBIND11_MODULE(_degloci, m) {
  m.doc() = "Exact degeneracy-locus computations over Q and F_p";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<Ring>(m, "Ring")
      .def(py::init(&make_ring), py::arg("characteristic"), py::arg("variables"), py::arg("order") = "grevlex")
      .def_property_readonly("variables", [](const Ring& r) { return r.ptr->vars(); })
      .def_property_readonly("characteristic", [](const Ring& r) { return r.ptr->field().characteristic(); })
      .def("__repr__", [](const Ring& r) { return r.ptr->describe(); });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const Ring& r, const std::string& text) { return Polynomial::parse(r.ptr, text); }))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const Polynomial& p, unsigned e) { return p.pow(e); })
      .def("is_zero", &Polynomial::is_zero)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("degree", &Polynomial::total_degree)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const Ring& r, const std::vector<std::string>& gens) { return Ideal(r.ptr, parse_all(r.ptr, gens)); }))
      .def_property_readonly("generators", [](const Ideal& I) { return print_all(I.gens()); })
      .def("groebner_basis", [](const Ideal& I) { return print_all(I.groebner_basis()); })
      .def("dimension", &krull_dimension)
      .def("contains", [](const Ideal& I, const std::string& p) { return I.contains(Polynomial::parse(I.ring(), p)); })
      .def("contains_radical",
           [](const Ideal& I, const std::string& p) { return radical_member(Polynomial::parse(I.ring(), p), I); })
      .def("equals", &Ideal::equals)
      .def("is_unit", &Ideal::is_unit)
      .def("saturate", [](const Ideal& I, const Ideal& J) { return saturate(I, J); })
      .def("intersect", [](const Ideal& I, const Ideal& J) { return intersect(I, J); })
      .def("__add__", &Ideal::operator+)
      .def("__str__", &Ideal::to_string);

  m.def("minors_ideal",
        [](const Ring& r, const std::vector<std::vector<std::string>>& rows, int k) {
          return minors_ideal(parse_matrix(r.ptr, rows), k);
        },
        py::arg("ring"), py::arg("rows"), py::arg("size"));
  m.def("pfaffian",
        [](const Ring& r, const std::vector<std::vector<std::string>>& rows) {
          return pfaffian(parse_matrix(r.ptr, rows)).to_string();
        },
        py::arg("ring"), py::arg("rows"));

  m.def("set_max_degree", &set_default_max_degree, py::arg("cap"));
  m.def("max_degree", &default_max_degree);

  m.def("check_scenario",
        [](const std::string& text, std::optional<std::uint32_t> characteristic) {
          return parse_scenario(text, options(characteristic, std::nullopt)).to_text();
        },
        py::arg("text"), py::arg("characteristic") = py::none(),
        "Parses and validates a scenario; returns its canonical text.");
  m.def("run_scenario",
        [](const std::string& text, std::optional<std::uint32_t> characteristic, std::optional<std::uint64_t> seed,
           const std::string& report, bool dry_run) {
          Scenario s = parse_scenario(text, options(characteristic, seed));
          RunOptions ro;
          ro.dry_run = dry_run;
          Report r;
          {
            py::gil_scoped_release release;
            r = run_scenario(s, ro);
          }
          return py::make_tuple(render(r, report), r.exit_code);
        },
        py::arg("text"), py::arg("characteristic") = py::none(), py::arg("seed") = py::none(),
        py::arg("report") = "json", py::arg("dry_run") = false,
        "Runs a scenario; returns (report, exit_code).");
  m.def("run_file",
        [](const std::string& path, std::optional<std::uint32_t> characteristic, const std::string& report) {
          Scenario s = load_scenario(path, options(characteristic, std::nullopt));
          Report r;
          {
            py::gil_scoped_release release;
            r = run_scenario(s);
          }
          return py::make_tuple(render(r, report), r.exit_code);
        },
        py::arg("path"), py::arg("characteristic") = py::none(), py::arg("report") = "json");
}
