// Pybind11 bindings for the bellbound core. Rationals cross the boundary as
// fractions.Fraction (never float), so Python callers keep exactness.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "bellbound/bounds.hpp"
#include "bellbound/errors.hpp"
#include "bellbound/inequality.hpp"
#include "bellbound/json_io.hpp"
#include "bellbound/lhv_oracle.hpp"
#include "bellbound/local_polytope.hpp"
#include "bellbound/strategies.hpp"

namespace py = pybind11;
using namespace bellbound;

namespace pybind11::detail {

template <>
struct type_caster<Rational> {
 public:
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;  // exactness: no silent floats
    if (PyLong_Check(src.ptr())) {
      value = parse_rational(py::str(src).cast<std::string>());
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      try {
        value = parse_rational(src.cast<std::string>());
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }
    if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
      const std::string num = py::str(src.attr("numerator")).cast<std::string>();
      const std::string den = py::str(src.attr("denominator")).cast<std::string>();
      try {
        value = parse_rational(num + "/" + den);
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }
    return false;
  }

  static handle cast(const Rational& src, return_value_policy, handle) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    py::object num = py::int_(py::str(numerator(src).str()));
    py::object den = py::int_(py::str(denominator(src).str()));
    return fraction_type(num, den).release();
  }
};

template <>
struct type_caster<BigInt> {
 public:
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& src, return_value_policy, handle) {
    return py::int_(py::str(src.str())).release();
  }
};

}  // namespace pybind11::detail

PYBIND11_MODULE(_core, m) {
  m.doc() = "Detection-efficiency-robust Bell functionals, no-signaling boxes and exact "
            "locality certification";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SignalingError>(m, "SignalingError", PyExc_ValueError);
  py::register_exception<ScenarioMismatchError>(m, "ScenarioMismatchError", PyExc_ValueError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<int, std::vector<int>, int>(), py::arg("parties"), py::arg("inputs"),
           py::arg("outputs"))
      .def_readonly("num_parties", &Scenario::num_parties)
      .def_readonly("inputs_per_party", &Scenario::inputs_per_party)
      .def_readonly("num_outputs", &Scenario::num_outputs)
      .def("no_detection", &Scenario::no_detection)
      .def("input_blocks", &Scenario::input_blocks)
      .def("outcomes_per_block", &Scenario::outcomes_per_block)
      .def("table_size", &Scenario::table_size)
      .def("table_index", &Scenario::table_index, py::arg("inputs"), py::arg("outputs"))
      .def(py::self == py::self)
      .def("__repr__", [](const Scenario& s) {
        std::string inputs;
        for (std::size_t i = 0; i < s.inputs_per_party.size(); ++i) {
          if (i) inputs += ",";
          inputs += std::to_string(s.inputs_per_party[i]);
        }
        return "Scenario(parties=" + std::to_string(s.num_parties) + ", inputs=[" + inputs +
               "], outputs=" + std::to_string(s.num_outputs) + ")";
      });

  py::class_<Behavior>(m, "Behavior")
      .def(py::init<Scenario, std::vector<Rational>>(), py::arg("scenario"), py::arg("table"))
      .def_readonly("scenario", &Behavior::scenario)
      .def_readonly("table", &Behavior::table)
      .def("at", &Behavior::at, py::arg("inputs"), py::arg("outputs"))
      .def("validate", &Behavior::validate)
      .def("ideal", &Behavior::ideal)
      .def(py::self == py::self);

  py::class_<NoSignalingWitness>(m, "NoSignalingWitness")
      .def_readonly("party", &NoSignalingWitness::party)
      .def_readonly("output", &NoSignalingWitness::output)
      .def_readonly("inputs_a", &NoSignalingWitness::inputs_a)
      .def_readonly("inputs_b", &NoSignalingWitness::inputs_b);

  py::class_<NoSignalingReport>(m, "NoSignalingReport")
      .def_readonly("passed", &NoSignalingReport::passed)
      .def_readonly("worst_violation", &NoSignalingReport::worst_violation)
      .def_readonly("witness", &NoSignalingReport::witness);

  m.def("check_no_signaling", &check_no_signaling, py::arg("behavior"));
  m.def("apply_loss", &apply_loss, py::arg("behavior"), py::arg("eta"));
  m.def("marginal", &marginal, py::arg("behavior"), py::arg("party"), py::arg("input"));

  py::class_<BellFunctional>(m, "BellFunctional")
      .def_readonly("scenario", &BellFunctional::scenario)
      .def_readonly("prime", &BellFunctional::prime)
      .def_readonly("penalty", &BellFunctional::penalty)
      .def_readonly("joint", &BellFunctional::joint)
      .def_readonly("marginals", &BellFunctional::marginals)
      .def("joint_at", &BellFunctional::joint_at, py::arg("inputs"), py::arg("outputs"))
      .def("marginal_at", &BellFunctional::marginal_at, py::arg("party"), py::arg("output"),
           py::arg("input"));

  m.def("build_bipartite", &build_bipartite, py::arg("m_a"), py::arg("m_b"));
  m.def("build_multipartite", &build_multipartite, py::arg("inputs"));
  m.def("evaluate", &evaluate, py::arg("functional"), py::arg("behavior"),
        py::arg("allow_signaling") = false);

  py::class_<DeterministicStrategy>(m, "DeterministicStrategy")
      .def_readonly("scenario", &DeterministicStrategy::scenario)
      .def_readonly("responses", &DeterministicStrategy::responses);

  py::class_<LocalModelComponent>(m, "LocalModelComponent")
      .def_readonly("weight", &LocalModelComponent::weight)
      .def_readonly("tables", &LocalModelComponent::tables);

  py::class_<LocalModel>(m, "LocalModel")
      .def_readonly("scenario", &LocalModel::scenario)
      .def_readonly("components", &LocalModel::components)
      .def("validate", &LocalModel::validate);

  m.def("modular_box_bipartite", &modular_box_bipartite, py::arg("m_a"), py::arg("m_b"),
        py::arg("prime"));
  m.def("modular_box_multipartite", &modular_box_multipartite, py::arg("inputs"),
        py::arg("prime"));
  m.def("total_strategy_count", &total_strategy_count, py::arg("scenario"));
  m.def("strategy_from_ordinal", &strategy_from_ordinal, py::arg("scenario"), py::arg("ordinal"));
  m.def("strategy_ordinal", &strategy_ordinal, py::arg("strategy"));
  m.def("enumerate_deterministic", &enumerate_deterministic, py::arg("scenario"),
        py::arg("budget") = std::uint64_t{1} << 20);
  m.def("deterministic_behavior", &deterministic_behavior, py::arg("strategy"));
  m.def("degrade_model", &degrade_model, py::arg("model"), py::arg("eta1"), py::arg("eta2"));
  m.def("model_behavior", &model_behavior, py::arg("model"));

  py::class_<LhvMaxResult>(m, "LhvMaxResult")
      .def_readonly("max_value", &LhvMaxResult::max_value)
      .def_readonly("argmax", &LhvMaxResult::argmax)
      .def_readonly("strategies_scanned", &LhvMaxResult::strategies_scanned);

  m.def("max_bell_value", &max_bell_value, py::arg("functional"),
        py::arg("budget") = kDefaultEnumerationBudget);
  m.def("max_bell_value_shard", &max_bell_value_shard, py::arg("functional"), py::arg("begin"),
        py::arg("end"), py::arg("budget") = kDefaultEnumerationBudget);
  m.def("outer_iteration_count", &outer_iteration_count, py::arg("functional"));
  m.def("local_bound_certificate", &local_bound_certificate, py::arg("functional"),
        py::arg("budget") = kDefaultEnumerationBudget);

  py::class_<SeparatingWitness>(m, "SeparatingWitness")
      .def_readonly("coeffs", &SeparatingWitness::coeffs)
      .def_readonly("gap", &SeparatingWitness::gap);

  py::class_<LocalityVerdict>(m, "LocalityVerdict")
      .def_readonly("model", &LocalityVerdict::model)
      .def_readonly("witness", &LocalityVerdict::witness)
      .def_readonly("lp_pivots", &LocalityVerdict::lp_pivots)
      .def("feasible", &LocalityVerdict::feasible);

  m.def("is_local", &is_local, py::arg("behavior"),
        py::arg("column_budget") = kDefaultLpColumnBudget);

  py::class_<CriticalEta>(m, "CriticalEta")
      .def_readonly("lower", &CriticalEta::lower)
      .def_readonly("upper", &CriticalEta::upper)
      .def_readonly("width", &CriticalEta::width)
      .def_readonly("lower_model", &CriticalEta::lower_model)
      .def_readonly("upper_witness", &CriticalEta::upper_witness);

  m.def("critical_eta", &critical_eta, py::arg("behavior"), py::arg("tol"),
        py::arg("column_budget") = kDefaultLpColumnBudget);

  m.def("min_prime_geq", &min_prime_geq, py::arg("n"));
  m.def("min_prime_gt", &min_prime_gt, py::arg("n"));
  m.def("bipartite_bound", &bipartite_bound, py::arg("m_a"), py::arg("m_b"));
  m.def(
      "multipartite_lower",
      [](int n, int m) {
        const MultipartiteLower r = multipartite_lower(n, m);
        return py::make_tuple(r.value, r.conjectural);
      },
      py::arg("n"), py::arg("m"), "Returns (value, conjectural)");

  py::class_<RootBound>(m, "RootBound")
      .def_readonly("radicand", &RootBound::radicand)
      .def_readonly("root_degree", &RootBound::root_degree)
      .def_readonly("value", &RootBound::value);

  m.def("multipartite_upper", &multipartite_upper, py::arg("inputs"));

  py::class_<BoundRow>(m, "BoundRow")
      .def_readonly("m", &BoundRow::m)
      .def_readonly("n", &BoundRow::n)
      .def_readonly("lower", &BoundRow::lower)
      .def_readonly("upper_radicand", &BoundRow::upper_radicand)
      .def_readonly("upper", &BoundRow::upper)
      .def_readonly("conjectural", &BoundRow::conjectural);

  m.def("bounds_table", &bounds_table, py::arg("m_list"), py::arg("n_max"));
  m.def(
      "bounds_csv",
      [](const std::vector<int>& m_list, int n_max, bool exact) {
        std::ostringstream out;
        write_bounds_csv(out, bounds_table(m_list, n_max), exact);
        return out.str();
      },
      py::arg("m_list"), py::arg("n_max"), py::arg("exact") = false);

  // File interchange (bit-exact JSON schemas shared with the CLI).
  m.def("save_behavior", [](const std::string& p, const Behavior& b) {
    save_json(p, behavior_to_json(b));
  });
  m.def("load_behavior", [](const std::string& p) { return behavior_from_json(load_json(p)); });
  m.def("save_functional", [](const std::string& p, const BellFunctional& f) {
    save_json(p, functional_to_json(f));
  });
  m.def("load_functional",
        [](const std::string& p) { return functional_from_json(load_json(p)); });
  m.def("save_model", [](const std::string& p, const LocalModel& lm) {
    save_json(p, model_to_json(lm));
  });
  m.def("load_model", [](const std::string& p) { return model_from_json(load_json(p)); });
  m.def("save_witness", [](const std::string& p, const SeparatingWitness& w) {
    save_json(p, witness_to_json(w));
  });
  m.def("load_witness", [](const std::string& p) { return witness_from_json(load_json(p)); });
}
