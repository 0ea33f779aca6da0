#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rca/time_symmetry.hpp"

namespace py = pybind11;
using namespace rca;

namespace {

CyclicConfig to_config(int alphabet, const std::vector<int>& cells) {
  return CyclicConfig{alphabet, cells};
}

std::vector<std::pair<int, int>> cells_of(const CellSet& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : s) out.emplace_back(c.track, c.position);
  return out;
}

VerifyOptions options(const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
  VerifyOptions o;
  if (mode == "exhaustive")
    o.mode = VerifyMode::exhaustive;
  else if (mode == "sampled")
    o.mode = VerifyMode::sampled;
  else if (mode != "auto")
    throw py::value_error("mode must be 'auto', 'exhaustive' or 'sampled'");
  o.samples = samples;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reversible cellular automata and their block representations";

  auto base = py::register_exception<Error>(m, "RcaError");
  py::register_exception<NotInjective>(m, "NotInjective", base.ptr());

  py::class_<Neighborhood>(m, "Neighborhood")
      .def(py::init<std::vector<int>>(), py::arg("offsets"))
      .def_property_readonly("offsets", [](const Neighborhood& n) { return n.offsets(); })
      .def("__len__", &Neighborhood::size)
      .def("__contains__", &Neighborhood::contains)
      .def("__eq__", [](const Neighborhood& a, const Neighborhood& b) { return a == b; })
      .def("issubset", &Neighborhood::is_subset_of)
      .def("__repr__", [](const Neighborhood& n) { return to_string(n); });

  py::class_<LocalRule>(m, "LocalRule")
      .def(py::init<int, Neighborhood, std::vector<int>>(), py::arg("alphabet"),
           py::arg("neighborhood"), py::arg("table"))
      .def_static("elementary", &LocalRule::elementary, py::arg("code"))
      .def_static("identity", &LocalRule::identity, py::arg("alphabet"))
      .def_static("cellwise", &LocalRule::cellwise, py::arg("permutation"))
      .def_property_readonly("alphabet", &LocalRule::alphabet)
      .def_property_readonly("neighborhood", &LocalRule::neighborhood)
      .def_property_readonly("table", &LocalRule::table)
      .def("__eq__", [](const LocalRule& a, const LocalRule& b) { return a == b; })
      .def("__repr__", [](const LocalRule& r) { return "LocalRule(\n" + format_rule(r) + ")"; });

  m.def("parse_rule", &parse_rule, py::arg("text"));
  m.def("format_rule", &format_rule, py::arg("rule"));
  m.def(
      "apply_cyclic",
      [](const LocalRule& r, const std::vector<int>& cells) {
        return apply_cyclic(r, to_config(r.alphabet(), cells)).cells;
      },
      py::arg("rule"), py::arg("cells"));
  m.def("minimize_neighborhood", &minimize_neighborhood, py::arg("rule"));
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"), py::arg("cap") = kDefaultTableCap);
  m.def("product", &product, py::arg("a"), py::arg("b"), py::arg("cap") = kDefaultTableCap);
  m.def("equal", &equal, py::arg("a"), py::arg("b"));
  m.def("is_injective", &is_injective, py::arg("rule"), py::arg("cap") = kDefaultTableCap);
  m.def("invert", &invert, py::arg("rule"), py::arg("radius_cap") = kDefaultRadiusCap,
        py::arg("cap") = kDefaultTableCap);

  py::class_<ReversibleCA>(m, "ReversibleCA")
      .def_static("from_rule", &ReversibleCA::from_rule, py::arg("forward"),
                  py::arg("radius_cap") = kDefaultRadiusCap)
      .def_static("from_pair", &ReversibleCA::from_pair, py::arg("forward"), py::arg("inverse"))
      .def_property_readonly("forward", &ReversibleCA::forward)
      .def_property_readonly("inverse", &ReversibleCA::inverse)
      .def_property_readonly("alphabet", &ReversibleCA::alphabet);

  py::class_<FinitePermutation>(m, "FinitePermutation")
      .def_property_readonly("window", [](const FinitePermutation& f) { return cells_of(f.window()); })
      .def_property_readonly("table", &FinitePermutation::table)
      .def("__call__", &FinitePermutation::operator(), py::arg("word"))
      .def("__eq__", [](const FinitePermutation& a, const FinitePermutation& b) { return a == b; })
      .def("__repr__", &dump_permutation);
  m.def(
      "localization", [](const FinitePermutation& f) { return cells_of(localization(f)); },
      py::arg("permutation"));

  m.def("bn_upper_bound", &bn_upper_bound, py::arg("g"));
  m.def("block_neighborhood", &block_neighborhood, py::arg("g"));
  m.def("reversible_update", &reversible_update, py::arg("g"), py::arg("i") = 0);

  py::class_<BlockCircuit>(m, "BlockCircuit")
      .def_readonly("period", &BlockCircuit::period)
      .def_readonly("alphabet", &BlockCircuit::alphabet)
      .def_readonly("tracks", &BlockCircuit::tracks)
      .def_readonly("construction", &BlockCircuit::construction)
      .def_property_readonly("layers", [](const BlockCircuit& c) {
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& l : c.layers) out.emplace_back(l.name, l.placements.size());
        return out;
      });
  m.def("assemble_circuit", &assemble_circuit, py::arg("g"), py::arg("period"));
  m.def(
      "apply_circuit",
      [](const BlockCircuit& c, const std::vector<int>& cells) {
        return apply_circuit(c, to_config(c.cell_alphabet(), cells)).cells;
      },
      py::arg("circuit"), py::arg("cells"));
  m.def("dump_circuit", &dump_circuit, py::arg("circuit"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("mode", [](const VerificationReport& r) { return to_string(r.mode); })
      .def_readonly("tested", &VerificationReport::tested)
      .def_readonly("mismatches", &VerificationReport::mismatches)
      .def_property_readonly("passed", &VerificationReport::passed)
      .def_property_readonly("counterexample", [](const VerificationReport& r) -> py::object {
        if (!r.first_counterexample) return py::none();
        const auto& c = *r.first_counterexample;
        return py::make_tuple(c.input.cells, c.expected.cells, c.actual.cells);
      });
  m.def(
      "verify_block_representation",
      [](const ReversibleCA& g, int period, const std::string& mode, std::uint64_t samples,
         std::uint64_t seed) { return verify_block_representation(g, period, options(mode, samples, seed)); },
      py::arg("g"), py::arg("period"), py::arg("mode") = "auto", py::arg("samples") = 100000,
      py::arg("seed") = 0);

  py::class_<Involution>(m, "Involution")
      .def(py::init<std::vector<int>>(), py::arg("table"))
      .def_static("identity", &Involution::identity, py::arg("alphabet"))
      .def_static("pair_swap", &Involution::pair_swap, py::arg("alphabet"))
      .def_property_readonly("table", &Involution::table)
      .def("__eq__", [](const Involution& a, const Involution& b) { return a == b; })
      .def("__repr__", [](const Involution& h) { return "Involution(" + to_string(h) + ")"; });
  m.def("is_ltsca", &is_ltsca, py::arg("g"), py::arg("h"));
  m.def("find_time_symmetries", &find_time_symmetries, py::arg("g"));
  m.def(
      "time_symmetrize",
      [](const ReversibleCA& f) {
        auto ts = time_symmetrize(f);
        return py::make_tuple(ts.automaton, ts.symmetry);
      },
      py::arg("f"));
  m.def(
      "ebr_of_square",
      [](const ReversibleCA& g, const Involution& h, int period, const std::string& mode,
         std::uint64_t samples, std::uint64_t seed) {
        auto s = ebr_of_square(g, h, period, options(mode, samples, seed));
        py::dict d;
        d["circuit"] = s.circuit;
        d["report"] = s.report;
        d["l0_localization"] = cells_of(s.l0.window());
        d["block_neighborhood"] = s.block_nbhd;
        d["l0_within_bn"] = s.l0_within_bn;
        return d;
      },
      py::arg("g"), py::arg("h"), py::arg("period"), py::arg("mode") = "auto",
      py::arg("samples") = 100000, py::arg("seed") = 0);
}
