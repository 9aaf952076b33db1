#include "qgc/codon.hpp"
#include "qgc/combinatorics.hpp"
#include "qgc/error.hpp"
#include "qgc/grover.hpp"
#include "qgc/physics.hpp"
#include "qgc/report.hpp"
#include "qgc/symmetry.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

namespace {

py::int_ to_py(const qgc::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

qgc::CountParams params(std::int64_t k, std::int64_t r) {
  if (k < 0 || r < 0 || k > UINT32_MAX || r > UINT32_MAX) {
    throw qgc::Error(qgc::ErrorKind::InvalidParams, "k and r must be non-negative 32-bit integers");
  }
  return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(r)};
}

py::object report_dict(const qgc::Report& r) {
  return py::module_::import("json").attr("loads")(r.data.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Codon multiset counting, genetic-code symmetry analysis and Grover numerics";

  static py::exception<qgc::Error> error(m, "Error", PyExc_ValueError);
  static py::exception<qgc::Error> capacity(m, "CapacityExceeded", error.ptr());
  static py::exception<qgc::FormatError> format(m, "FormatError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qgc::FormatError& e) {
      py::set_error(format, e.what());
    } catch (const qgc::Error& e) {
      if (e.kind() == qgc::ErrorKind::CapacityExceeded) {
        py::set_error(capacity, e.what());
      } else {
        py::set_error(error, e.what());
      }
    }
  });

  // combinatorics
  py::class_<qgc::MultisetClass>(m, "MultisetClass")
      .def(py::init<std::vector<std::uint32_t>>(), py::arg("counts"))
      .def_property_readonly("counts", &qgc::MultisetClass::counts)
      .def_property_readonly("canonical_word", &qgc::MultisetClass::canonical_word)
      .def("spell", py::overload_cast<>(&qgc::MultisetClass::spell, py::const_))
      .def("__eq__", [](const qgc::MultisetClass& a, const qgc::MultisetClass& b) { return a == b; })
      .def("__hash__", [](const qgc::MultisetClass& c) { return py::hash(py::tuple(py::cast(c.counts()))); })
      .def("__repr__", [](const qgc::MultisetClass& c) {
        return "MultisetClass(" + (c.alphabet_size() <= 26 ? c.spell() : std::string("...")) + ")";
      });

  m.def("arrangements", [](std::int64_t k, std::int64_t r) { return to_py(qgc::arrangements(params(k, r))); },
        py::arg("k"), py::arg("r"), "k**r, exact.");
  m.def("multiset_count", [](std::int64_t k, std::int64_t r) { return to_py(qgc::multiset_count(params(k, r))); },
        py::arg("k"), py::arg("r"), "C(k + r - 1, r), exact.");
  m.def("enumerate_multisets",
        [](std::int64_t k, std::int64_t r, std::uint64_t cap) { return qgc::enumerate_multisets(params(k, r), cap); },
        py::arg("k"), py::arg("r"), py::arg("cap") = qgc::kDefaultEnumerationCap);
  m.def("class_size", [](const qgc::MultisetClass& c) { return to_py(qgc::class_size(c)); });
  m.def("canonicalize",
        [](const std::string& word, const std::string& alphabet) { return qgc::canonicalize(word, alphabet); },
        py::arg("word"), py::arg("alphabet") = "ACGU");

  // codon model
  py::class_<qgc::GeneticCode>(m, "GeneticCode")
      .def_property_readonly("name", &qgc::GeneticCode::name)
      .def_property_readonly("id", &qgc::GeneticCode::id)
      .def("translate", [](const qgc::GeneticCode& code, const std::string& codon) {
        return std::string(1, code.translate(qgc::Codon::parse(codon)).symbol());
      })
      .def("is_start", [](const qgc::GeneticCode& code, const std::string& codon) {
        return code.is_start(qgc::Codon::parse(codon));
      })
      .def("__eq__", [](const qgc::GeneticCode& a, const qgc::GeneticCode& b) { return a == b; });

  m.def("parse_table", [](const std::string& text) { return qgc::parse_table(text); });
  m.def("serialize_table", &qgc::serialize_table);
  m.def("builtin_standard_code", &qgc::builtin_standard_code, py::return_value_policy::copy);
  m.def("translate", [](const qgc::GeneticCode& code, const std::string& codon) {
    return std::string(1, code.translate(qgc::Codon::parse(codon)).symbol());
  });
  m.def("normalize_alphabet", [](const std::string& word, const std::string& direction) {
    if (direction == "dna-to-rna") return qgc::normalize_alphabet(word, qgc::AlphabetDirection::DnaToRna);
    if (direction == "rna-to-dna") return qgc::normalize_alphabet(word, qgc::AlphabetDirection::RnaToDna);
    throw qgc::Error(qgc::ErrorKind::InvalidParams, "direction must be 'dna-to-rna' or 'rna-to-dna'");
  }, py::arg("word"), py::arg("direction") = "dna-to-rna");

  // symmetry analysis; reports come back as plain dicts
  m.def("analyze", [](const qgc::GeneticCode& code) { return report_dict(qgc::analyze_report(code)); },
        "Class partition, prefix significance and violation metrics as a dict.");
  m.def("multiset_invariance_violation", [](const qgc::GeneticCode& code) {
    const auto v = qgc::multiset_invariance_violation(code);
    py::dict d;
    d["incoherent_pairs"] = v.incoherent_pairs;
    d["same_class_pairs"] = v.same_class_pairs;
    d["fraction"] = v.fraction;
    d["incoherent_pairs_excluding_stop"] = v.incoherent_pairs_excluding_stop;
    d["same_class_pairs_excluding_stop"] = v.same_class_pairs_excluding_stop;
    d["fraction_excluding_stop"] = v.fraction_excluding_stop;
    return d;
  });
  m.def("synthetic_code", [](std::uint64_t seed, const std::string& kind) {
    if (kind == "uniform") return qgc::synthetic_code(seed, qgc::SyntheticKind::Uniform);
    if (kind == "invariant") return qgc::synthetic_code(seed, qgc::SyntheticKind::MultisetInvariant);
    if (kind == "perturbed") return qgc::synthetic_code(seed, qgc::SyntheticKind::Perturbed);
    if (kind == "third-base") return qgc::synthetic_code(seed, qgc::SyntheticKind::ThirdBaseDegenerate);
    throw qgc::Error(qgc::ErrorKind::InvalidParams, "unknown synthetic kind '" + kind + "'");
  }, py::arg("seed"), py::arg("kind") = "invariant");

  // grover
  m.def("solve_n", &qgc::solve_n, py::arg("q"));
  m.def("solve_q", &qgc::solve_q, py::arg("n"));
  m.def("success_probability", &qgc::success_probability, py::arg("n"), py::arg("q"));

  py::class_<qgc::GroverRun>(m, "GroverRun")
      .def_readonly("n", &qgc::GroverRun::n)
      .def_readonly("marked", &qgc::GroverRun::marked)
      .def_readonly("amplitudes", &qgc::GroverRun::amplitudes)
      .def_readonly("iterations_applied", &qgc::GroverRun::iterations_applied)
      .def_readonly("marked_probability", &qgc::GroverRun::marked_probability)
      .def_readonly("max_norm_drift", &qgc::GroverRun::max_norm_drift)
      .def_property_readonly("final_probability", &qgc::GroverRun::final_probability);
  m.def("simulate", [](std::int64_t n, std::int64_t q, std::int64_t marked, std::int64_t max_n) {
    return qgc::simulate(n, q, marked, qgc::SimulationLimits{max_n, std::int64_t{1} << 20});
  }, py::arg("n"), py::arg("q"), py::arg("marked") = 0, py::arg("max_n") = std::int64_t{1} << 20);

  // physics
  py::class_<qgc::PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double hbar, double delta_x, double mass, double hbond_energy) {
             return qgc::PhysicalParams{hbar, delta_x, mass, hbond_energy};
           }),
           py::arg("hbar") = 1.05e-27, py::arg("delta_x") = 1.7e-8, py::arg("mass") = 1.67e-24,
           py::arg("hbond_energy") = 7e-14)
      .def_readwrite("hbar", &qgc::PhysicalParams::hbar)
      .def_readwrite("delta_x", &qgc::PhysicalParams::delta_x)
      .def_readwrite("mass", &qgc::PhysicalParams::mass)
      .def_readwrite("hbond_energy", &qgc::PhysicalParams::hbond_energy);

  py::class_<qgc::ScaleComparison>(m, "ScaleComparison")
      .def_readonly("scale_factor", &qgc::ScaleComparison::scale_factor)
      .def_readonly("momentum_base", &qgc::ScaleComparison::momentum_base)
      .def_readonly("energy_base", &qgc::ScaleComparison::energy_base)
      .def_readonly("momentum_scaled", &qgc::ScaleComparison::momentum_scaled)
      .def_readonly("energy_scaled", &qgc::ScaleComparison::energy_scaled)
      .def_readonly("energy_ratio", &qgc::ScaleComparison::energy_ratio)
      .def_readonly("base_to_hbond", &qgc::ScaleComparison::base_to_hbond)
      .def_readonly("scaled_to_hbond", &qgc::ScaleComparison::scaled_to_hbond);

  m.def("momentum_uncertainty", &qgc::momentum_uncertainty, py::arg("params") = qgc::PhysicalParams{});
  m.def("kinetic_energy", &qgc::kinetic_energy, py::arg("dp"), py::arg("mass"));
  m.def("scale_comparison", &qgc::scale_comparison, py::arg("params") = qgc::PhysicalParams{},
        py::arg("scale_factor") = 3.0);
}
