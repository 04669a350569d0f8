#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "qskein/conversion.hpp"
#include "qskein/evaluation.hpp"
#include "qskein/homfly.hpp"
#include "qskein/qbasis.hpp"
#include "qskein/verify.hpp"

namespace py = pybind11;
using namespace qskein;

namespace {

Partition part(const std::vector<int>& parts) { return Partition(parts); }

using ExpansionRow = std::tuple<std::vector<int>, std::vector<int>, std::string>;

std::vector<ExpansionRow> expansion_rows(const QExpansion& e) {
  std::vector<ExpansionRow> rows;
  for (const auto& [key, coeff] : e.coeffs)
    rows.emplace_back(key.first.parts(), key.second.parts(), coeff.to_string());
  return rows;
}

py::dict diagram_result(const LinkDiagram& d, int max_crossings) {
  const RingElem framed = framed_homfly(d, max_crossings);
  const RingElem p = homfly_p(d, max_crossings);
  py::dict out;
  out["writhe"] = d.writhe();
  out["crossings"] = d.crossing_count();
  out["framed"] = framed.to_string();
  out["p"] = p.to_string();
  return out;
}

}  // namespace

PYBIND11_MODULE(_qskein, m) {
  m.doc() = "exact skein computations in the determinantal basis";

  m.def(
      "q_expand",
      [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return q_element(part(lam), part(mu)).to_string();
      },
      py::arg("lam"), py::arg("mu"),
      "basis element of a pair of partitions, as generator text");

  m.def(
      "template_rows",
      [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return TemplateMatrix(index_vector(part(lam), part(mu))).to_strings();
      },
      py::arg("lam"), py::arg("mu"), "entries of the template matrix");

  m.def(
      "eigenvalue",
      [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return eigenvalue(part(lam), part(mu)).to_string();
      },
      py::arg("lam"), py::arg("mu"), "positive-meridian eigenvalue");

  m.def(
      "expand",
      [](const std::string& element) {
        return expansion_rows(expand_in_q(parse_skein_element(element)));
      },
      py::arg("element"),
      "coordinates in the basis as (lambda, mu, coeff) rows");

  m.def(
      "multiply",
      [](const std::vector<int>& l1, const std::vector<int>& m1,
         const std::vector<int>& l2, const std::vector<int>& m2) {
        return expansion_rows(multiply_in_q(part(l1), part(m1), part(l2), part(m2)));
      },
      py::arg("l1"), py::arg("m1"), py::arg("l2"), py::arg("m2"),
      "structure constants of a product of basis elements");

  m.def(
      "evaluate",
      [](const std::string& element) {
        return eval_element(parse_skein_element(element)).to_string();
      },
      py::arg("element"), "evaluation of an element");

  m.def(
      "macdonald",
      [](const std::vector<int>& lam) {
        return macdonald_schur(part(lam)).to_string();
      },
      py::arg("lam"), "hook-content product for a single partition");

  m.def(
      "phi_n",
      [](const std::string& element, int n) {
        return qskein::phi_n(parse_skein_element(element), n).to_string();
      },
      py::arg("element"), py::arg("n"), "rank-N restriction of an element");

  m.def(
      "homfly_braid",
      [](const std::vector<int>& word, int strands, int max_crossings) {
        return diagram_result(LinkDiagram::from_braid_word(word, strands),
                              max_crossings);
      },
      py::arg("word"), py::arg("strands"),
      py::arg("max_crossings") = kDefaultCrossingCap,
      "framed and normalized polynomial of a braid closure");

  m.def(
      "k_box_box_braid",
      [](const std::vector<int>& word, int strands, int max_crossings) {
        return k_invariant_box_box(LinkDiagram::from_braid_word(word, strands),
                                   max_crossings)
            .to_string();
      },
      py::arg("word"), py::arg("strands"),
      py::arg("max_crossings") = kDefaultCrossingCap,
      "reverse-parallel basis-element invariant of a knot");

  m.def(
      "verify",
      [](const std::string& suite, int max_size, int cases, std::uint64_t seed) {
        VerifyOptions opts;
        opts.max_size = max_size;
        opts.cases = cases;
        opts.seed = seed;
        const SuiteResult r = run_suite(suite, opts);
        py::dict out;
        out["suite"] = r.suite;
        out["passed"] = r.passed;
        out["failed"] = r.failed;
        out["failures"] = r.failures;
        return out;
      },
      py::arg("suite") = "all", py::arg("max_size") = 3, py::arg("cases") = 40,
      py::arg("seed") = 7001, "run an invariant suite and report counts");
}
