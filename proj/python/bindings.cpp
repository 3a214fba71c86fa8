#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parityknot/parityknot.hpp"

namespace py = pybind11;
namespace pk = parityknot;

namespace {

py::object to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

pk::ChordDiagram chord_diagram(const std::vector<pk::ChordId>& labels, bool closed) {
  return pk::ChordDiagram(labels, closed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parity-filtration invariants of free and virtual knots";

  auto base = py::register_exception<pk::Error>(m, "Error");
  py::register_exception<pk::ParseError>(m, "ParseError", base.ptr());

  py::enum_<pk::TypeRule>(m, "TypeRule")
      .value("EVEN_LINKED", pk::TypeRule::EvenLinked)
      .value("ODD_LINKED", pk::TypeRule::OddLinked)
      .value("LINK_COUNT_MOD4", pk::TypeRule::LinkCountMod4);

  py::class_<pk::ChordDiagram>(m, "ChordDiagram")
      .def(py::init(&chord_diagram), py::arg("labels"), py::arg("closed") = false)
      .def_property_readonly("word", [](const pk::ChordDiagram& d) {
        return std::vector<pk::ChordId>(d.word().begin(), d.word().end());
      })
      .def_property_readonly("chord_count", &pk::ChordDiagram::chord_count)
      .def_property_readonly("closed", &pk::ChordDiagram::closed)
      .def("with_closed", &pk::ChordDiagram::with_closed)
      .def("to_json", [](const pk::ChordDiagram& d) { return to_py(nlohmann::json(d)); })
      .def("__eq__", [](const pk::ChordDiagram& a, const pk::ChordDiagram& b) { return a == b; })
      .def("__repr__", [](const pk::ChordDiagram& d) {
        return "ChordDiagram('" + pk::serialize_free_code(d) + "'" + (d.closed() ? ", closed" : "") + ")";
      });

  py::class_<pk::GaussDiagram>(m, "GaussDiagram")
      .def_property_readonly("underlying", &pk::GaussDiagram::underlying)
      .def_property_readonly("chord_count", &pk::GaussDiagram::chord_count)
      .def_property_readonly("closed", &pk::GaussDiagram::closed)
      .def_property_readonly("signs", [](const pk::GaussDiagram& k) {
        std::vector<int> out;
        for (auto s : k.signs()) out.push_back(pk::value(s));
        return out;
      })
      .def("with_closed", &pk::GaussDiagram::with_closed)
      .def("with_arrow_flipped", &pk::GaussDiagram::with_arrow_flipped)
      .def("to_json", [](const pk::GaussDiagram& k) { return to_py(nlohmann::json(k)); })
      .def("__eq__", [](const pk::GaussDiagram& a, const pk::GaussDiagram& b) { return a == b; })
      .def("__repr__", [](const pk::GaussDiagram& k) {
        return "GaussDiagram('" + pk::serialize_virtual_code(k) + "'" + (k.closed() ? ", closed" : "") + ")";
      });

  m.def("parse_free_code", &pk::parse_free_code, py::arg("text"), py::arg("closed") = false);
  m.def("parse_virtual_code", &pk::parse_virtual_code, py::arg("text"), py::arg("closed") = false);
  m.def("random_diagram", &pk::random_diagram, py::arg("n"), py::arg("seed"), py::arg("closed") = false);
  m.def("random_gauss_diagram", &pk::random_gauss_diagram, py::arg("n"), py::arg("seed"),
        py::arg("closed") = false);
  m.def("odd_chords", &pk::odd_chords);
  m.def("index_assignment", [](const pk::ChordDiagram& d, int m) { return pk::index_assignment(d, m).index; });

  const auto rule = py::arg("rule") = pk::TypeRule::EvenLinked;
  m.def("gamma", [](const pk::ChordDiagram& d, int m, pk::TypeRule r) { return pk::gamma(d, m, r).to_array(); },
        py::arg("diagram"), py::arg("m") = 1, rule);
  m.def("gamma_compact",
        [](const pk::ChordDiagram& d, int m, pk::TypeRule r) { return pk::gamma_compact(d, m, r).to_array(); },
        py::arg("diagram"), py::arg("m") = 1, rule);
  m.def("delta", [](const pk::GaussDiagram& k, int m, pk::TypeRule r) { return pk::delta(k, m, r).to_array(); },
        py::arg("knot"), py::arg("m") = 1, rule);
  m.def("delta_compact",
        [](const pk::GaussDiagram& k, int m, pk::TypeRule r) { return pk::delta_compact(k, m, r).to_array(); },
        py::arg("knot"), py::arg("m") = 1, rule);
  m.def("vassiliev_value",
        [](const pk::GaussDiagram& k, int m, int degree, pk::TypeRule r) {
          return to_py(nlohmann::json(pk::vassiliev_value(k, m, degree, r)));
        },
        py::arg("knot"), py::arg("m") = 1, py::arg("k") = 1, rule);
  m.def("alternating_sum",
        [](const pk::GaussDiagram& k, const std::vector<pk::ChordId>& singular, int m, int degree, pk::TypeRule r) {
          return to_py(nlohmann::json(pk::alternating_sum({k, singular}, m, degree, r)));
        },
        py::arg("knot"), py::arg("singular"), py::arg("m") = 1, py::arg("k") = 1, rule);

  m.def("cayley_dot",
        [](const std::string& group, int m, int radius) {
          return pk::to_dot(pk::cayley_ball(pk::parse_group_kind(group), m, radius));
        },
        py::arg("group"), py::arg("m") = 1, py::arg("radius") = 1);

  m.def("fuzz",
        [](bool virtual_knots, bool closed, int m, pk::TypeRule r, std::size_t trials, std::size_t steps,
           std::uint64_t seed, const std::string& kinds) {
          pk::FuzzConfig cfg;
          cfg.kind = virtual_knots ? pk::KnotKind::Virtual : pk::KnotKind::Free;
          cfg.closed = closed;
          cfg.m = m;
          cfg.rule = r;
          cfg.trials = trials;
          cfg.steps = steps;
          cfg.seed = seed;
          cfg.kinds = pk::MoveKindSet::parse(kinds);
          pk::FuzzSummary s;
          {
            py::gil_scoped_release release;
            s = pk::run_fuzz(cfg);
          }
          return to_py(nlohmann::json(s));
        },
        py::arg("virtual") = false, py::arg("closed") = false, py::arg("m") = 1, rule, py::arg("trials") = 1000,
        py::arg("steps") = 30, py::arg("seed") = 1, py::arg("kinds") = "all");

  m.def("vassiliev_check",
        [](int m, int k, std::size_t trials, std::uint64_t seed, pk::TypeRule r) {
          return to_py(nlohmann::json(pk::run_vassiliev_check(m, k, trials, seed, r)));
        },
        py::arg("m") = 1, py::arg("k") = 1, py::arg("trials") = 200, py::arg("seed") = 1, rule);
}
