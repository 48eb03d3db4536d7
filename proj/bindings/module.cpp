#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cascade/adaptive.hpp"
#include "cascade/bounds.hpp"
#include "cascade/construct.hpp"
#include "cascade/design.hpp"
#include "cascade/exact.hpp"
#include "cascade/feasibility.hpp"
#include "cascade/systematic.hpp"

namespace py = pybind11;
using namespace cascade;

namespace {

// Adapts a python callable answering tests to the oracle interface.
class CallableOracle final : public CascadeOracle {
 public:
  explicit CallableOracle(py::function fn) : fn_(std::move(fn)) {}

 private:
  ItemId do_answer(const TestSeq& t) override {
    return fn_(t).cast<ItemId>();
  }
  py::function fn_;
};

}  // namespace

PYBIND11_MODULE(_cascadegt, m) {
  m.doc() = "cascaded group testing: designs, feasibility, bounds, solvers";

  py::class_<Design>(m, "Design")
      .def(py::init<>())
      .def(py::init([](int n, int k, std::vector<TestSeq> tests) {
             Design d{n, k, std::move(tests)};
             validate_design(d);
             return d;
           }),
           py::arg("n_items"), py::arg("max_defectives"), py::arg("tests"))
      .def_readwrite("n_items", &Design::n_items)
      .def_readwrite("max_defectives", &Design::max_defectives)
      .def_readwrite("tests", &Design::tests)
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("__repr__", [](const Design& d) {
        std::ostringstream out;
        out << "Design(n_items=" << d.n_items
            << ", max_defectives=" << d.max_defectives << ", tests="
            << d.tests.size() << ")";
        return out.str();
      });

  py::class_<ConditionWitness>(m, "ConditionWitness")
      .def_readonly("subset", &ConditionWitness::subset)
      .def_readonly("item", &ConditionWitness::item);

  py::class_<CollisionWitness>(m, "CollisionWitness")
      .def_readonly("first", &CollisionWitness::first)
      .def_readonly("second", &CollisionWitness::second);

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("feasible", &FeasibilityReport::feasible)
      .def_readonly("condition_witness", &FeasibilityReport::condition_witness)
      .def_readonly("collision_witness", &FeasibilityReport::collision_witness)
      .def("__bool__", [](const FeasibilityReport& r) { return r.feasible; });

  py::class_<BoundsSummary>(m, "BoundsSummary")
      .def_readonly("n", &BoundsSummary::n)
      .def_readonly("k", &BoundsSummary::k)
      .def_readonly("lower_alpha_beta", &BoundsSummary::lower_alpha_beta)
      .def_readonly("lower_es", &BoundsSummary::lower_es)
      .def_readonly("lower_trivial", &BoundsSummary::lower_trivial)
      .def_readonly("upper_randomized", &BoundsSummary::upper_randomized)
      .def_readonly("upper_recursive", &BoundsSummary::upper_recursive)
      .def_readonly("upper_constructed", &BoundsSummary::upper_constructed)
      .def_readonly("best_lower", &BoundsSummary::best_lower)
      .def_readonly("best_upper", &BoundsSummary::best_upper);

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("n", &ExactResult::n)
      .def_readonly("k", &ExactResult::k)
      .def_readonly("optimum", &ExactResult::optimum)
      .def_readonly("witness", &ExactResult::witness)
      .def_readonly("certificate", &ExactResult::certificate);

  py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
  py::register_exception<ParseError>(m, "DesignParseError");

  m.def("run_test", [](const TestSeq& t, std::vector<ItemId> defectives) {
          return run_test(t, make_defective_set(std::move(defectives)));
        },
        py::arg("test"), py::arg("defectives"));
  m.def("run_design", [](const Design& d, std::vector<ItemId> defectives) {
          return run_design(d, make_defective_set(std::move(defectives)));
        },
        py::arg("design"), py::arg("defectives"));
  m.def("decode", &decode, py::arg("design"), py::arg("outputs"));
  m.def("compose", &compose, py::arg("s1"), py::arg("s2"));
  m.def("restrict_design", &restrict_design, py::arg("design"), py::arg("m"));
  m.def("dedupe_tests", &dedupe_tests, py::arg("design"));

  m.def("parse_design", [](const std::string& text) {
          std::istringstream in(text);
          return parse_design(in);
        },
        py::arg("text"));
  m.def("parse_design_file", &parse_design_file, py::arg("path"));
  m.def("format_design", &format_design, py::arg("design"),
        py::arg("comments") = std::vector<std::string>{});

  m.def("f_count", [](const Design& d, std::vector<ItemId> s, ItemId v) {
          return f_count(d, make_defective_set(std::move(s)), v);
        },
        py::arg("design"), py::arg("subset"), py::arg("item"));
  m.def("check_feasible_thm1", &check_feasible_thm1, py::arg("design"),
        py::arg("budget") = kDefaultStepBudget);
  m.def("check_injective_oracle", &check_injective_oracle, py::arg("design"),
        py::arg("budget") = kDefaultStepBudget);
  m.def("is_systematic", &is_systematic, py::arg("design"));
  m.def("check_systematic_thm3", &check_systematic_thm3, py::arg("design"),
        py::arg("budget") = kDefaultStepBudget);

  m.def("strip_leader", &strip_leader, py::arg("design"), py::arg("test_index"));
  m.def("to_systematic", &to_systematic, py::arg("design"));

  m.def("design_k1", &design_k1, py::arg("n"));
  m.def("design_k2", &design_k2, py::arg("n"));
  m.def("procedure_a", &procedure_a, py::arg("t_base"), py::arg("g_base"));
  m.def("design_for", &design_for, py::arg("n"), py::arg("k"));
  m.def("randomized_design", [](int n, int k, int t_count, std::uint64_t seed) {
          return randomized_design(n, k, t_count, Seed{seed});
        },
        py::arg("n"), py::arg("k"), py::arg("t_count"), py::arg("seed") = 0);

  m.def("adaptive_identify",
        [](int n, int k, py::function answer) {
          CallableOracle oracle(std::move(answer));
          DefectiveSet found = adaptive_identify(n, k, oracle);
          return py::make_tuple(found, oracle.queries());
        },
        py::arg("n"), py::arg("k"), py::arg("answer"),
        "Runs the adaptive scheme against answer(test) -> item-or-0; "
        "returns (identified set, query count).");
  m.def("adaptive_identify_set",
        [](int n, int k, std::vector<ItemId> hidden) {
          SetOracle oracle(make_defective_set(std::move(hidden)));
          DefectiveSet found = adaptive_identify(n, k, oracle);
          return py::make_tuple(found, oracle.queries());
        },
        py::arg("n"), py::arg("k"), py::arg("hidden"));

  m.def("lower_bound_thm4", &lower_bound_thm4, py::arg("n"), py::arg("k"),
        py::arg("alpha"), py::arg("beta"));
  m.def("lower_bound_corollary", &lower_bound_corollary, py::arg("n"), py::arg("k"));
  m.def("lower_bound_es", &lower_bound_es, py::arg("n"), py::arg("k"));
  m.def("upper_bound_randomized", &upper_bound_randomized, py::arg("n"), py::arg("k"));
  m.def("upper_bound_recursive", &upper_bound_recursive, py::arg("n"), py::arg("k"));
  m.def("bounds_summary", &bounds_summary, py::arg("n"), py::arg("k"));

  m.def("exact_optimal_T", &exact_optimal_T, py::arg("n"), py::arg("k"),
        py::arg("budget") = kDefaultStepBudget,
        py::arg("fix_first_identity") = true);
}
