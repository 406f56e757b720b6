#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusionkit/cases.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/table_io.hpp"

namespace py = pybind11;
using namespace fusionkit;

namespace
{

CaseConfig make_config(std::string const &kind, int p, int level, std::optional<int> index, std::size_t cap)
{
  auto k = parse_case(kind);
  if (!k)
    throw std::invalid_argument("unknown case '" + kind + "'");
  CaseConfig cfg{*k, p, level, index, cap};
  if (cfg.kind == CaseKind::AZ && !cfg.az_index)
    cfg.az_index = default_az_index(p);
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Exact finite-group computations behind the fusionkit tools";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<GroupError>(m, "GroupError", PyExc_RuntimeError);

  m.def(
    "verify_json",
    [](std::string const &kind, int p, int level, std::optional<int> index, std::size_t cap) {
      auto cfg = make_config(kind, p, level, index, cap);
      py::gil_scoped_release release;
      return verify_case(cfg).to_json();
    },
    py::arg("case") = "sup", py::arg("prime") = 3, py::arg("level") = 1, py::arg("index") = py::none(),
    py::arg("cap") = kDefaultClosureCap);

  m.def(
    "decompose",
    [](std::string const &kind, int p, int level, std::optional<int> index, std::string const &format,
       bool collapsed) {
      auto dec = emit_decomposition(make_config(kind, p, level, index, kDefaultClosureCap));
      auto const &d = collapsed ? dec.diagram : dec.full;
      if (format == "json")
        return d.to_json();
      if (format == "dot")
        return d.to_dot();
      if (format == "text")
        return d.to_text();
      throw std::invalid_argument("format must be json, dot or text");
    },
    py::arg("case") = "sup", py::arg("prime") = 3, py::arg("level") = 1, py::arg("index") = py::none(),
    py::arg("format") = "json", py::arg("collapsed") = true);

  m.def(
    "aut_gamma",
    [](int p) {
      auto d = gamma_aut(p);
      py::dict out;
      out["order"] = d->aut->order();
      out["inner"] = d->aut->inner_subgroup().order();
      out["complement"] = d->complement ? py::cast(d->complement->order()) : py::none();
      out["xi"] = d->xi;
      return out;
    },
    py::arg("prime"));

  m.def(
    "fusion_json",
    [](std::string const &table, std::optional<int> prime) {
      auto t = parse_group_table(table);
      int const p = prime.value_or(t.prime);
      auto fd = FusionData::make(t.group, p);
      auto poset = sd_poset(fd);
      return fusion_report_json(fd, poset, t.group.name() + " at p = " + std::to_string(p));
    },
    py::arg("table"), py::arg("prime") = py::none());

  m.def(
    "dump_group", [](std::string const &name) {
      auto t = builtin_group(name);
      return group_table_json(t.group, t.prime);
    },
    py::arg("name"));
  m.def("builtin_groups", &builtin_group_names);
}
