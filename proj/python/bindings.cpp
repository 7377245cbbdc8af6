#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ufmax/analyzer.hpp"
#include "ufmax/bounds.hpp"
#include "ufmax/decompose.hpp"
#include "ufmax/io.hpp"
#include "ufmax/sieve.hpp"
#include "ufmax/solver.hpp"

namespace py = pybind11;
using ufmax::Rational;
using ufmax::Solution;

// Reports cross the boundary as the same JSON the command line prints;
// the Python side decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact unit-fraction search";
  m.attr("__version__") = ufmax::tool_version();

  m.def("reciprocal_sum", [](const std::vector<std::int64_t>& dens) {
    return ufmax::reciprocal_sum(dens).str();
  });

  m.def(
      "harmonic_window",
      [](std::int64_t hi, const std::string& target) {
        return ufmax::to_json(ufmax::harmonic_window(hi, Rational::parse(target))).dump();
      },
      py::arg("hi"), py::arg("target") = "1");

  m.def(
      "sieve",
      [](std::int64_t lo, std::int64_t hi, const std::string& target, bool multi_term) {
        ufmax::SieveOptions opts;
        opts.multi_term = multi_term;
        return ufmax::to_json(ufmax::sieve_fixed_point(lo, hi, Rational::parse(target), opts)).dump();
      },
      py::arg("lo"), py::arg("hi"), py::arg("target") = "1", py::arg("multi_term") = true);

  m.def("residue_coefficient", &ufmax::residue_coefficient, py::arg("a"), py::arg("p"), py::arg("e"));

  m.def("two_term_splits", &ufmax::two_term_splits, py::arg("n"), py::arg("cap") = 0);
  m.def(
      "k_term_splits",
      [](std::int64_t n, int terms, std::int64_t cap) {
        return ufmax::k_term_splits({.n = n, .terms = terms, .cap = cap});
      },
      py::arg("n"), py::arg("terms"), py::arg("cap"));
  m.def("lcm_three_term_split", [](std::int64_t n, const std::vector<std::int64_t>& parts) {
    return ufmax::lcm_three_term_split(n, parts);
  });

  m.def(
      "solve",
      [](std::int64_t lo, std::int64_t hi, int min_terms, int max_terms, bool maximize,
         const std::string& target, const std::string& mode,
         std::optional<std::vector<std::int64_t>> candidates, unsigned threads, bool residue_prune,
         bool force_bigint) {
        ufmax::SearchSpec spec;
        spec.lo = lo;
        spec.hi = hi;
        spec.min_terms = min_terms;
        spec.max_terms = max_terms;
        spec.maximize = maximize;
        spec.target = Rational::parse(target);
        spec.mode = ufmax::parse_search_mode(mode);
        spec.candidates = std::move(candidates);
        spec.threads = threads;
        spec.residue_prune = residue_prune;
        spec.force_bigint = force_bigint;
        ufmax::SearchResult result;
        {
          py::gil_scoped_release release;
          result = ufmax::solve(spec);
        }
        return ufmax::to_json(result).dump();
      },
      py::arg("lo"), py::arg("hi"), py::arg("min_terms") = 1, py::arg("max_terms") = 0,
      py::arg("maximize") = false, py::arg("target") = "1", py::arg("mode") = "dfs",
      py::arg("candidates") = py::none(), py::arg("threads") = 1, py::arg("residue_prune") = false,
      py::arg("force_bigint") = false);

  m.def(
      "verify_solution",
      [](const std::vector<std::int64_t>& dens, const std::string& target,
         std::optional<std::pair<std::int64_t, std::int64_t>> range) {
        return ufmax::to_json(ufmax::verify_solution(dens, Rational::parse(target), range)).dump();
      },
      py::arg("dens"), py::arg("target") = "1", py::arg("range") = py::none());

  m.def("common_core", [](const std::vector<Solution>& s) { return ufmax::common_core(s); });
  m.def("frequency_table", [](const std::vector<Solution>& s) { return ufmax::frequency_table(s); });
  m.def("analyze", [](const std::vector<Solution>& s) { return ufmax::to_json(ufmax::analyze(s)).dump(); });
  m.def("canonical_solutions", [](const std::vector<Solution>& s) { return ufmax::canonical_solutions(s); });
  m.def("sha256_hex", [](const std::string& s) { return ufmax::sha256_hex(s); });
}
