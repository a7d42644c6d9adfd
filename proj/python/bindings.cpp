#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/engine.hpp"
#include "koszul/errors.hpp"
#include "koszul/families.hpp"
#include "koszul/ideal_io.hpp"
#include "koszul/koszul_oracle.hpp"
#include "koszul/lattice.hpp"
#include "koszul/random_ideal.hpp"
#include "koszul/report.hpp"
#include "koszul/simplicial.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

using Exps = std::vector<ExponentVector::value_type>;

ExponentVector to_vector(const Exps& v) { return ExponentVector(v); }

py::tuple to_tuple(const ExponentVector& a) {
  py::tuple t(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) t[k] = a[k];
  return t;
}

py::list to_list(const std::vector<ExponentVector>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_tuple(x));
  return out;
}

MonomialIdeal make_ideal(std::size_t num_vars, const std::vector<Exps>& gens) {
  std::vector<ExponentVector> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(to_vector(g));
  return minimalize(num_vars, std::move(vs));
}

py::dict stats_dict(const CheckStats& s) {
  py::dict d;
  d["multidegrees_checked"] = s.multidegrees_checked;
  d["rank_computations"] = s.rank_computations;
  d["les_shortcuts"] = s.les_shortcuts;
  d["taylor_size"] = s.taylor_size;
  d["minimal_total"] = s.minimal_total;
  d["minimal_distinct"] = s.minimal_distinct;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multigraded Koszul homology of monomial ideals";

  auto base = py::register_exception<Error>(m, "KoszulError", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.attr("DEFAULT_CHARACTERISTIC") = kDefaultCharacteristic;

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init(&make_ideal), py::arg("num_vars"), py::arg("generators"))
      .def_static("parse", [](const std::string& text) { return parse_ideal_string(text); }, py::arg("text"))
      .def_static("read", &read_ideal_file, py::arg("path"))
      .def_static("maximal", &maximal_ideal, py::arg("num_vars"))
      .def_static(
          "random",
          [](std::size_t n, std::size_t g, std::uint32_t min_deg, std::uint32_t max_deg, std::uint64_t seed) {
            return random_ideal(RandomIdealParams{n, g, min_deg, max_deg, seed});
          },
          py::arg("n"), py::arg("g"), py::arg("min_deg"), py::arg("max_deg"), py::arg("seed"))
      .def_property_readonly("num_vars", &MonomialIdeal::num_vars)
      .def_property_readonly("generators",
                             [](const MonomialIdeal& I) {
                               return to_list({I.generators().begin(), I.generators().end()});
                             })
      .def("contains", [](const MonomialIdeal& I, const Exps& a) { return I.contains(to_vector(a)); })
      .def("format", &format_ideal)
      .def("__len__", &MonomialIdeal::size)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& I) {
        std::string s = "MonomialIdeal(" + std::to_string(I.num_vars()) + ", [";
        for (std::size_t k = 0; k < I.size(); ++k) s += (k ? ", " : "") + format_monomial(I.generator(k));
        return s + "])";
      });

  py::class_<BettiTable>(m, "BettiTable")
      .def_property_readonly("num_vars", &BettiTable::num_vars)
      .def_property_readonly("characteristic", &BettiTable::characteristic)
      .def("entries",
           [](const BettiTable& t) {
             py::dict out;
             for (const auto& [key, value] : t.entries()) out[py::make_tuple(key.first, to_tuple(key.second))] = value;
             return out;
           })
      .def("at", [](const BettiTable& t, std::size_t i, const Exps& a) { return t.at(i, to_vector(a)); })
      .def("totals", &BettiTable::totals)
      .def("alternating_sum", &BettiTable::alternating_sum)
      .def_property_readonly("stats", [](const BettiTable& t) { return stats_dict(t.stats()); })
      .def("to_json", [](const BettiTable& t, bool stats) { return render_json(t, {stats, Strategy::Auto}); },
           py::arg("stats") = false)
      .def("to_text", [](const BettiTable& t, bool stats) { return render_text(t, {stats, Strategy::Auto}); },
           py::arg("stats") = false);

  m.def(
      "betti_table",
      [](const MonomialIdeal& I, const std::string& strategy, std::uint32_t p, std::size_t threads) {
        auto s = parse_strategy(strategy);
        py::gil_scoped_release release;
        return betti_table(I, s, p, EngineOptions{threads});
      },
      py::arg("ideal"), py::arg("strategy") = "auto", py::arg("p") = kDefaultCharacteristic, py::arg("threads") = 1);
  m.def(
      "koszul_homology_dim",
      [](const MonomialIdeal& I, const Exps& a, std::size_t i, std::uint32_t p) {
        return koszul_homology_dim(I, to_vector(a), i, p);
      },
      py::arg("ideal"), py::arg("multidegree"), py::arg("i"), py::arg("p") = kDefaultCharacteristic);
  m.def(
      "taylor_betti",
      [](const MonomialIdeal& I, std::size_t i, const Exps& a, std::uint32_t p) {
        return taylor_betti(I, i, to_vector(a), p);
      },
      py::arg("ideal"), py::arg("i"), py::arg("multidegree"), py::arg("p") = kDefaultCharacteristic);
  m.def(
      "betti_via_simplicial",
      [](const MonomialIdeal& I, std::size_t i, const Exps& a, std::uint32_t p) {
        return betti_via_simplicial(I, i, to_vector(a), p);
      },
      py::arg("ideal"), py::arg("i"), py::arg("multidegree"), py::arg("p") = kDefaultCharacteristic);
  m.def("lcm_lattice", [](const MonomialIdeal& I) { return to_list(lcm_lattice(I).elements()); });
  m.def("candidate_multidegrees",
        [](const MonomialIdeal& I, std::size_t i) { return to_list(candidate_multidegrees(I, i)); });
  m.def("is_generic", &is_generic);
  m.def("scarf_betti", [](const MonomialIdeal& I, std::uint32_t p) { return scarf_betti(I, p); }, py::arg("ideal"),
        py::arg("p") = kDefaultCharacteristic);
  m.def(
      "is_quasi_stable",
      [](const MonomialIdeal& I, std::optional<std::uint64_t> bound) {
        auto q = is_quasi_stable(I, bound);
        py::dict out;
        out["quasi_stable"] = q.quasi_stable;
        out["degree_bound"] = q.degree_bound;
        out["basis"] = q.basis ? to_list(q.basis->elements) : py::list();
        out["divergent_chain"] = to_list(q.divergent_chain);
        return out;
      },
      py::arg("ideal"), py::arg("bound") = py::none());
}
