#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flatperm/errors.hpp"
#include "flatperm/genfun.hpp"
#include "flatperm/permcore.hpp"
#include "flatperm/recurrence.hpp"
#include "flatperm/verify.hpp"

namespace py = pybind11;
using namespace flatperm;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const Poly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

py::object to_py(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Integer(q.get_num())), to_py(Integer(q.get_den())));
}

py::list to_py(const XVPoly& p) {
  py::list rows;
  for (const auto& row : p.to_matrix()) {
    py::list r;
    for (const auto& c : row) r.append(to_py(c));
    rows.append(r);
  }
  return rows;
}

py::dict to_py(const OccurrenceTable& t) {
  py::dict out;
  for (const auto& [r, c] : t.counts) out[py::int_(r)] = to_py(c);
  return out;
}

std::vector<int> letters(const Permutation& p) { return {p.letters().begin(), p.letters().end()}; }

}  // namespace

PYBIND11_MODULE(_flatperm, m) {
  m.doc() = "Occurrences of the vincular pattern 13-2 in flattened permutations, computed exactly";

  static py::exception<Error> error(m, "Error");
  static py::exception<IdentityViolation> identity_violation(m, "IdentityViolation", error.ptr());
  static py::exception<LimitExceeded> limit_exceeded(m, "LimitExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IdentityViolation& e) {
      PyErr_SetString(identity_violation.ptr(), e.what());
    } catch (const LimitExceeded& e) {
      PyErr_SetString(limit_exceeded.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("flatten", [](std::vector<int> p) { return letters(flatten(Permutation(std::move(p)))); }, py::arg("perm"));
  m.def("standard_cycle_form", [](std::vector<int> p) { return standard_cycle_form(Permutation(std::move(p))).cycles(); },
        py::arg("perm"));
  m.def("count_13_2", [](std::vector<int> p) { return count_13_2(Permutation(std::move(p))); }, py::arg("perm"),
        "Occurrences of 13-2 in the word itself (no flattening).");
  m.def(
      "distribution",
      [](int n, std::vector<int> prefix, int limit, bool parallel) {
        EnumerationOptions options{limit, parallel};
        OccurrenceTable t;
        {
          py::gil_scoped_release release;
          t = distribution(n, prefix, options);
        }
        return to_py(t);
      },
      py::arg("n"), py::arg("prefix") = std::vector<int>{}, py::arg("limit") = kDefaultEnumerationLimit,
      py::arg("parallel") = false, "Brute-force {r: count} over all permutations of length n.");

  m.def("max_occurrences", &max_occurrences, py::arg("n"));
  m.def("max_pattern_perm", [](int n) { return letters(max_pattern_perm(n)); }, py::arg("n"));
  m.def("min_length_for", &min_length_for, py::arg("r"));
  m.def("appendix_c_witness", [](int r, int i) { return letters(appendix_c_witness(r, i)); }, py::arg("r"), py::arg("i"));
  m.def(
      "lemma21_pair",
      [](std::vector<int> sigma) {
        const auto [a, b] = lemma21_pair(Permutation(std::move(sigma)));
        return std::make_pair(letters(a), letters(b));
      },
      py::arg("sigma"));

  m.def("g_poly", [](int n) { return to_py(recurrence::g_poly(n)); }, py::arg("n"),
        "Coefficients of g_n(q), lowest power first.");
  m.def("g1k_poly", [](int n, int k) { return to_py(recurrence::g1k_poly(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("b_poly", [](int n, int j) { return to_py(recurrence::b_poly(n, j)); }, py::arg("n"), py::arg("j"));
  m.def(
      "coeff_g", [](int n, int r, std::optional<int> k) { return to_py(recurrence::coeff_g(n, r, k)); }, py::arg("n"),
      py::arg("r"), py::arg("k") = py::none());
  m.def("avoider_count", [](int n) { return to_py(recurrence::avoider_count(n)); }, py::arg("n"));
  m.def("average_occurrences", [](int n) { return to_py(recurrence::average_occurrences(n)); }, py::arg("n"));

  m.def("p_poly", [](int r) { return to_py(genfun::p_poly(r)); }, py::arg("r"),
        "P_r as rows[x_power][v_power].");
  m.def(
      "c_table",
      [](int r) {
        py::list out;
        for (const auto& c : genfun::c_table(r).c) out.append(to_py(c));
        return out;
      },
      py::arg("r"));
  m.def(
      "rational_gf",
      [](int r) {
        const auto gf = genfun::rational_gf(r);
        py::dict out;
        out["numerator"] = to_py(gf.numerator);
        out["s_power"] = gf.s_power;
        out["t_power"] = gf.t_power;
        return out;
      },
      py::arg("r"), "numerator / ((1-x)^s_power (1-2x)^t_power) = G_r(x, v).");

  m.def(
      "verify",
      [](const std::string& suite, int rmax) {
        const auto parsed = verify::parse_suite(suite);
        if (!parsed) throw std::invalid_argument("unknown suite '" + suite + "'");
        verify::Options options;
        options.rmax = rmax;
        std::vector<Check> checks;
        {
          py::gil_scoped_release release;
          checks = verify::run(*parsed, options);
        }
        py::list out;
        for (const auto& c : checks) out.append(py::make_tuple(c.claim, c.passed, c.detail));
        return out;
      },
      py::arg("suite") = "all", py::arg("rmax") = 5);
}
