#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/facets.hpp"
#include "positroid/flats.hpp"
#include "positroid/oracle.hpp"
#include "positroid/positroid.hpp"
#include "positroid/rank.hpp"
#include "positroid/verify.hpp"

namespace py = pybind11;
using namespace positroid;

namespace {

Subset to_subset(const Positroid& p, const std::vector<int>& labels) {
  for (int x : labels) p.ground().check_label(x);
  return Subset::of(labels);
}

RankMethod rank_method(const std::string& name) {
  if (name == "push") return RankMethod::kPush;
  if (name == "ncp") return RankMethod::kNonCrossing;
  throw InputError("unknown rank method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(positroid, m) {
  m.doc() = "Positroids from decorated permutations and Grassmann necklaces";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());
  py::register_exception<FixedPointError>(m, "FixedPointError", base.ptr());

  py::class_<Positroid>(m, "Positroid")
      .def(py::init([](const std::string& perm) { return Positroid::parse(perm); }), py::arg("permutation"),
           "From a decorated permutation such as \"3 4 1 2\" or \"2 1 3b\".")
      .def_static("from_necklace",
                  [](const std::string& text) { return Positroid(GrassmannNecklace::parse(text)); },
                  py::arg("necklace"))
      .def_property_readonly("n", &Positroid::size)
      .def_property_readonly("d", &Positroid::rank)
      .def_property_readonly("permutation", [](const Positroid& p) { return p.permutation().to_string(); })
      .def_property_readonly("has_fixed_points", &Positroid::has_fixed_points)
      .def("necklace",
           [](const Positroid& p) {
             std::vector<std::vector<int>> out;
             for (int k = 1; k <= p.size(); ++k) out.push_back(p.ground().ordered(p.necklace_at(k), k));
             return out;
           },
           "I_1 .. I_n, each listed in the cyclic order starting at its index.")
      .def("necklace_string", [](const Positroid& p) { return p.necklace().to_string(); })
      .def("__repr__", [](const Positroid& p) { return "Positroid('" + p.permutation().to_string() + "')"; });

  m.def("bases",
        [](const Positroid& p) {
          std::vector<std::vector<int>> out;
          for (Subset b : enumerate_bases(p)) out.push_back(b.labels());
          return out;
        },
        py::arg("p"));
  m.def("is_basis", [](const Positroid& p, const std::vector<int>& b) { return is_basis(p, to_subset(p, b)); },
        py::arg("p"), py::arg("labels"));

  m.def("rank",
        [](const Positroid& p, const std::vector<int>& e, const std::string& method) {
          const Subset s = to_subset(p, e);
          if (method == "oracle") {
            p.require_fixed_point_free("rank");
            return oracle_rank(OracleMatroid::from_positroid(p), s);
          }
          return rank(p, s, rank_method(method));
        },
        py::arg("p"), py::arg("labels"), py::arg("method") = "push");
  m.def("push_trace",
        [](const Positroid& p, const std::vector<int>& e) {
          std::vector<std::vector<int>> out;
          for (const PushState& s : push_procedure(p, to_subset(p, e)).trace) out.push_back(s.basis.labels());
          return out;
        },
        py::arg("p"), py::arg("labels"), "Bases H1 .. Hk of the push procedure.");
  m.def("closure", [](const Positroid& p, const std::vector<int>& e) { return closure(p, to_subset(p, e)).labels(); },
        py::arg("p"), py::arg("labels"));
  m.def("is_flat",
        [](const Positroid& p, const std::vector<int>& e) {
          const FlatnessVerdict v = is_flat(p, to_subset(p, e));
          return std::make_tuple(v.flat, v.by_criterion ? "criterion" : "closure");
        },
        py::arg("p"), py::arg("labels"), "Returns (flat, 'criterion' or 'closure').");

  m.def("interval_flats",
        [](const Positroid& p) {
          std::vector<std::tuple<int, int>> out;
          for (const CyclicInterval& iv : interval_flats(p)) out.emplace_back(iv.first, iv.last);
          return out;
        },
        py::arg("p"));
  m.def("inseparable_flats",
        [](const Positroid& p) {
          std::vector<std::tuple<std::vector<int>, int>> out;
          for (const FlatRecord& f : enumerate_inseparable_flats(p)) out.emplace_back(f.members.labels(), f.rank);
          return out;
        },
        py::arg("p"), "Pairs (members, rank) in lexicographic order.");

  m.def("facets",
        [](const Positroid& p, const std::string& system) {
          if (system != "minimal" && system != "intersections") {
            throw InputError("unknown system '" + system + "'");
          }
          return to_hrep(independent_set_facets(p, system == "minimal" ? IndependentSystem::kInseparableFlats
                                                                       : IndependentSystem::kIntervalFlatIntersections));
        },
        py::arg("p"), py::arg("system") = "minimal", "H-representation text of the independent set polytope.");
  m.def("basis_polytope", [](const Positroid& p, bool prune) { return to_hrep(basis_polytope_system(p, prune)); },
        py::arg("p"), py::arg("prune") = false, "H-representation text of the basis polytope.");

  m.def("verify",
        [](const Positroid& p, int exhaustive_limit, std::uint64_t samples, std::uint64_t seed) {
          const VerifyReport report = verify_suite(p, {exhaustive_limit, samples, seed});
          py::dict checks;
          for (const CheckResult& c : report.checks) {
            checks[py::str(c.name)] = py::make_tuple(c.passed, c.cases, c.counterexample);
          }
          return py::make_tuple(report.passed(), checks, report.warnings);
        },
        py::arg("p"), py::arg("exhaustive_limit") = VerifyOptions{}.exhaustive_limit,
        py::arg("samples") = VerifyOptions{}.samples, py::arg("seed") = VerifyOptions{}.seed,
        "Returns (passed, {name: (passed, cases, counterexample)}, warnings).");

  m.def("random_permutation",
        [](int n, std::uint64_t seed) { return random_derangement(n, seed).to_string(); }, py::arg("n"),
        py::arg("seed"), "A random fixed-point-free permutation, reproducible from the seed.");
}
