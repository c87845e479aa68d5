#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"
#include "plrs/error.hpp"
#include "plrs/families.hpp"
#include "plrs/oracle.hpp"
#include "plrs/transforms.hpp"
#include "plrs/verify.hpp"

namespace py = pybind11;
using namespace plrs;

namespace {

Coefficients coeffs(const std::vector<std::int64_t>& values) { return Coefficients::validate(values); }

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_py(const py::handle& value) {
  py::object f = py::module_::import("fractions").attr("Fraction")(value);
  Rational q(BigInt(py::str(f.attr("numerator")).cast<std::string>()),
             BigInt(py::str(f.attr("denominator")).cast<std::string>()));
  q.canonicalize();
  return q;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object verdict(const Verdict& v) { return json_to_py(to_json(v)); }

py::dict bracket(const RootBracket& b) {
  py::dict d;
  d["lo"] = fraction(b.lo());
  d["hi"] = fraction(b.hi());
  d["approx"] = b.approx();
  d["exact_root"] = b.exact_root() ? py::object(py::int_(*b.exact_root())) : py::object(py::none());
  return d;
}

py::dict bound(const FamilyBound& b) {
  py::dict d;
  d["max_n"] = b.max_n;
  d["proven"] = b.proven;
  d["rule_id"] = b.rule_id;
  return d;
}

py::dict record(const TransformRecord& r) {
  auto values = [](const Coefficients& c) {
    return std::vector<std::uint64_t>(c.values().begin(), c.values().end());
  };
  py::dict d;
  d["input"] = values(r.input);
  d["output"] = values(r.output);
  d["rule"] = std::string(to_string(r.rule));
  d["guarantee"] = std::string(to_string(r.guarantee));
  return d;
}

FamilyShape shape(const std::string& name, std::uint32_t a, std::uint32_t b) {
  if (name == "one-zeros") return family::OneZeros{a};
  if (name == "ones-zeros") return family::OnesZeros{a, b};
  if (name == "two-ones-zeros") return family::TwoOnesZeros{a};
  if (name == "one-zeros-ones") return family::OneZerosOnes{a, b};
  throw Error(Errc::InvalidArgument, "unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_plrs, m) {
  m.doc() = "Completeness of positive linear recurrence sequences";

  static py::exception<Error> error(m, "PlrsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("generate_terms",
        [](const std::vector<std::int64_t>& c, std::size_t n) {
          const auto t = generate_terms(coeffs(c), n);
          py::list out;
          for (const auto& h : t.terms()) out.append(to_py(h));
          return out;
        },
        py::arg("c"), py::arg("n"));

  m.def("gap_trace",
        [](const std::vector<std::int64_t>& c, std::size_t n) {
          const auto g = gap_trace(generate_terms(coeffs(c), n));
          py::list gaps, margins;
          for (const auto& b : g.gaps) gaps.append(to_py(b));
          for (const auto& d : g.margins) margins.append(to_py(d));
          return py::make_tuple(gaps, margins);
        },
        py::arg("c"), py::arg("n"), "Brown's gaps B_1..B_n and margins D_1..D_{n-1}.");

  m.def("check_completeness",
        [](const std::vector<std::int64_t>& c, std::size_t horizon, bool assume_2l1) {
          return verdict(check_completeness(coeffs(c), horizon, assume_2l1));
        },
        py::arg("c"), py::arg("horizon"), py::arg("assume_2l1") = false);

  m.def("decide",
        [](const std::vector<std::int64_t>& c, std::size_t horizon, std::size_t horizon_cap, bool assume_2l1) {
          return verdict(decide(coeffs(c), {horizon, horizon_cap, assume_2l1}));
        },
        py::arg("c"), py::arg("horizon") = 0, py::arg("horizon_cap") = 4096, py::arg("assume_2l1") = false);

  m.def("first_failure_index",
        [](const std::vector<std::int64_t>& c, std::size_t horizon) { return first_failure_index(coeffs(c), horizon); },
        py::arg("c"), py::arg("horizon"));

  m.def("doubling_holds",
        [](const std::vector<std::int64_t>& c, std::size_t n) { return doubling_holds(generate_terms(coeffs(c), n)); },
        py::arg("c"), py::arg("n"));

  m.def("verify_verdict",
        [](const py::object& v) {
          const auto r = verify_verdict(verdict_from_json(py_to_json(v)));
          return py::make_tuple(r.valid, r.reason);
        },
        py::arg("verdict"));

  m.def("reachable_sums",
        [](const std::vector<std::int64_t>& c, std::size_t prefix, std::size_t budget_bits) {
          return reachable_sums(generate_terms(coeffs(c), prefix), budget_bits).to_vector();
        },
        py::arg("c"), py::arg("prefix"), py::arg("budget_bits") = kDefaultBudgetBits);

  m.def("smallest_unrepresentable",
        [](const std::vector<std::int64_t>& c, std::size_t prefix, std::size_t budget_bits) {
          return smallest_unrepresentable(coeffs(c), prefix, budget_bits);
        },
        py::arg("c"), py::arg("prefix"), py::arg("budget_bits") = kDefaultBudgetBits);

  m.def("oracle_verdict",
        [](const std::vector<std::int64_t>& c, std::size_t max_prefix, std::size_t budget_bits) {
          return verdict(oracle_verdict(coeffs(c), max_prefix, budget_bits));
        },
        py::arg("c"), py::arg("max_prefix"), py::arg("budget_bits") = kDefaultBudgetBits);

  m.def("bound_one_zeros", [](std::uint32_t k) { return bound(bound_one_zeros(k)); }, py::arg("k"));
  m.def("bound_ones_zeros", [](std::uint32_t g, std::uint32_t k) { return bound(bound_ones_zeros(g, k)); },
        py::arg("g"), py::arg("k"));
  m.def("bound_two_ones_zeros", [](std::uint32_t k) { return bound(bound_two_ones_zeros(k)); }, py::arg("k"));
  m.def("bound_one_zeros_ones",
        [](std::uint32_t length, std::uint32_t m) { return bound(bound_one_zeros_ones(length, m)); },
        py::arg("length"), py::arg("m"));
  m.def("classify_family",
        [](const std::string& family, std::uint32_t a, std::uint32_t b, std::uint64_t n) {
          return verdict(classify_family(shape(family, a, b), n));
        },
        py::arg("family"), py::arg("a"), py::arg("b") = 0, py::arg("n") = 1,
        "a, b are (k), (g, k), (k) or (L, m) depending on the family.");
  m.def("search_max_n",
        [](const std::string& family, std::uint32_t a, std::uint32_t b) {
          const auto s = search_max_n(shape(family, a, b));
          return py::make_tuple(s.max_n, s.resolved);
        },
        py::arg("family"), py::arg("a"), py::arg("b") = 0);

  m.def("append_coeff", [](const std::vector<std::int64_t>& c, std::int64_t x) { return record(append_coeff(coeffs(c), x)); },
        py::arg("c"), py::arg("c_new"));
  m.def("decrease_last", [](const std::vector<std::int64_t>& c, std::int64_t k) { return record(decrease_last(coeffs(c), k)); },
        py::arg("c"), py::arg("k_last"));
  m.def("merge_last_two", [](const std::vector<std::int64_t>& c) { return record(merge_last_two(coeffs(c))); },
        py::arg("c"));

  m.def("char_poly_eval",
        [](const std::vector<std::int64_t>& c, const py::object& t) { return fraction(char_poly_eval(coeffs(c), from_py(t))); },
        py::arg("c"), py::arg("t"));
  m.def("principal_root",
        [](const std::vector<std::int64_t>& c, double tol) { return bracket(principal_root(coeffs(c), tol)); },
        py::arg("c"), py::arg("tol") = kDefaultRootTolerance);
  m.def("compare_principal_roots",
        [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
          const auto o = compare_principal_roots(coeffs(a), coeffs(b));
          return o < 0 ? -1 : (o > 0 ? 1 : 0);
        },
        py::arg("a"), py::arg("b"));
  m.def("lambda_threshold",
        [](std::size_t length, double tol) {
          const auto t = lambda_threshold(length, tol);
          py::dict d;
          d["length"] = t.length;
          d["n_l"] = t.n_l;
          d["lambda"] = bracket(t.lambda);
          return d;
        },
        py::arg("length"), py::arg("tol") = kDefaultRootTolerance);
  m.def("triage", [](const std::vector<std::int64_t>& c) { return verdict(triage(coeffs(c))); }, py::arg("c"));
  m.def("min_root_in_pls",
        [](std::size_t length, std::uint64_t s) {
          const auto r = min_root_in_pls(length, s);
          return py::make_tuple(std::vector<std::uint64_t>(r.minimizer.values().begin(), r.minimizer.values().end()),
                                bracket(r.root));
        },
        py::arg("length"), py::arg("s"));
  m.def("root_order_gap",
        [](std::size_t length, std::uint64_t k) {
          const auto g = root_order_gap(length, k);
          return py::make_tuple(g.gap1, g.gap2, g.certified);
        },
        py::arg("length"), py::arg("k"));
  m.def("denseness_scan",
        [](std::size_t length, double epsilon) {
          const auto r = denseness_scan(length, epsilon);
          py::dict d;
          py::list roots;
          for (const auto& [k, b] : r.roots) roots.append(py::make_tuple(k, b.approx()));
          d["roots"] = roots;
          d["max_gap"] = r.max_gap;
          d["strictly_increasing"] = r.strictly_increasing;
          d["gaps_decreasing"] = r.gaps_decreasing;
          d["ends_at_two"] = r.ends_at_two;
          d["max_gap_below_epsilon"] = r.max_gap_below_epsilon;
          return d;
        },
        py::arg("length"), py::arg("epsilon"));
}
