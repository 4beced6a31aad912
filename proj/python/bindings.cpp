#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "remixed/identities.hpp"
#include "remixed/process.hpp"
#include "remixed/recurrence.hpp"
#include "remixed/serialize.hpp"
#include "remixed/symmetrize.hpp"
#include "remixed/trees.hpp"

namespace py = pybind11;
using namespace remixed;

namespace {

py::object pyint(const Int& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object pyrat(const Rat& x) {
  if (x.get_den() == 1) return pyint(x.get_num());
  return py::module_::import("fractions")
      .attr("Fraction")(pyint(x.get_num()), pyint(x.get_den()));
}

/// Coefficient list from exponent 0 upward; ints when integral, Fractions
/// otherwise. The zero polynomial gives [].
py::list poly_coeffs(const QPoly& p) {
  py::list out;
  for (const Rat& a : p.coeffs()) out.append(pyrat(a));
  return out;
}

QPoly compute_dispatch(const Composition& c, const std::string& engine) {
  if (engine == "recurrence") return remixed::remixed(c);
  if (engine == "process") return remixed_via_process(c);
  if (engine == "postnikov") return remixed_via_postnikov(canonical_word(c));
  if (engine == "bilabeled") return remixed_via_bilabeled(c);
  if (engine == "product") return product_formula(c);
  if (engine == "qds") return remixed_via_qds(c);
  throw std::invalid_argument("unknown engine: " + engine);
}

}  // namespace

PYBIND11_MODULE(_remixed, m) {
  m.doc() = "Exact remixed Eulerian numbers A_c(q) and verification suite";

  m.def(
      "remixed",
      [](const Composition& c, const std::string& engine) {
        return poly_coeffs(compute_dispatch(c, engine));
      },
      py::arg("c"), py::arg("engine") = "recurrence",
      "Coefficients of A_c(q) from exponent 0 upward.");

  m.def(
      "remixed_str",
      [](const Composition& c) { return remixed::remixed(c).to_string(); },
      py::arg("c"),
      "A_c(q) rendered in descending powers.");

  m.def("qint", [](int n) { return poly_coeffs(qint(n)); }, py::arg("n"));
  m.def("qfact", [](int n) { return poly_coeffs(qfact(n)); }, py::arg("n"));
  m.def("qbinom", [](int n, int k) { return poly_coeffs(qbinom(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def("valuation", &valuation_of, py::arg("c"));
  m.def("degree", &degree_of, py::arg("c"));
  m.def("all_compositions", &all_compositions, py::arg("r"));

  m.def(
      "verify",
      [](int r, const std::vector<std::string>& selection) {
        py::list out;
        for (const auto& res : run_suite(r, selection)) {
          py::dict d;
          d["check"] = res.name;
          d["r"] = res.r;
          d["pass"] = res.pass;
          d["witness"] = res.witness.empty() ? py::object(py::none())
                                             : py::object(py::str(res.witness));
          out.append(d);
        }
        return out;
      },
      py::arg("r"), py::arg("selection") = std::vector<std::string>{"all"});

  m.def(
      "simulate_json",
      [](const Composition& c, const std::string& q, long samples, uint64_t seed) {
        SimulationReport rep = simulate(c, rat_from_string(q), samples, seed);
        return simulation_to_json(rep).dump();
      },
      py::arg("c"), py::arg("q"), py::arg("samples"), py::arg("seed"),
      "JSON report of the Monte-Carlo stabilization process.");

  m.def(
      "count_postnikov",
      [](const Word& word) { return enumerate_postnikov(word).size(); },
      py::arg("word"));
  m.def(
      "count_bilabeled",
      [](const Composition& c) { return enumerate_bilabeled(c).size(); },
      py::arg("c"));

  m.def(
      "qhit",
      [](const std::vector<int>& lambda) {
        QHitResult res = qhit_from_partition(lambda);
        py::dict d;
        d["a"] = res.a;
        d["beta"] = res.beta;
        py::dict hits;
        for (size_t j = 0; j < res.hits.size(); ++j)
          if (!res.hits[j].is_zero())
            hits[py::int_(j)] = poly_coeffs(res.hits[j]);
        d["hits"] = hits;
        return d;
      },
      py::arg("lam"));

  m.def(
      "qvolume",
      [](const std::vector<std::string>& mu) {
        std::vector<Rat> m2;
        for (const auto& s : mu) m2.push_back(rat_from_string(s));
        return poly_coeffs(qvolume_expansion(m2));
      },
      py::arg("mu"), "V^q from the A_c expansion; mu entries as strings.");
}
