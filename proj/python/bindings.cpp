#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "partent/entropy.hpp"
#include "partent/errors.hpp"
#include "partent/optimize.hpp"
#include "partent/serialize.hpp"
#include "partent/table1.hpp"

namespace py = pybind11;
using namespace partent;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Tolerances with_zero(double zero) {
  Tolerances tol;
  tol.zero = zero;
  return tol;
}

SubsetMask mask_of(const PureState& state, const std::vector<int>& particles) {
  return SubsetMask::from_particles(state.n_particles(), particles);
}

py::array_t<Complex> to_numpy(const CMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m(r, c);
  return out;
}

CMatrix from_numpy(const ComplexArray& a) {
  if (a.ndim() != 2) throw DimensionMismatch("expected a 2-D array");
  auto view = a.unchecked<2>();
  CMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c));
  return m;
}

py::list report_entries(const EntropyReport& report) {
  py::list out;
  for (const auto& e : report.entries()) out.append(py::make_tuple(py::tuple(py::cast(e.kept.particles())), e.entropy));
  return out;
}

SupportPattern support_of(const std::vector<std::string>& bits) {
  return SupportPattern::from_bitstrings(bits);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partial-entropy entanglement analysis of multi-qubit pure states";

  static py::exception<Error> base(m, "PartentError", PyExc_RuntimeError);
  py::register_exception<EmptyState>(m, "EmptyState", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<FactorExtractionFailure>(m, "FactorExtractionFailure", base.ptr());
  py::register_exception<ClassificationUnstable>(m, "ClassificationUnstable", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<PureState>(m, "PureState")
      .def_static(
          "from_amplitudes",
          [](int n, const ComplexArray& a) {
            return PureState::from_amplitudes(n, std::vector<Complex>(a.data(), a.data() + a.size()));
          },
          py::arg("n"), py::arg("amplitudes"))
      .def_property_readonly("n_particles", &PureState::n_particles)
      .def_property_readonly("amplitudes",
                             [](const PureState& s) {
                               py::array_t<Complex> out(static_cast<py::ssize_t>(s.dim()));
                               std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
                               return out;
                             })
      .def("amplitude", &PureState::amplitude, py::arg("bits"))
      .def("terms",
           [](const PureState& s) {
             std::vector<std::pair<std::string, Complex>> out;
             for (const auto& t : s.terms()) out.emplace_back(t.bitstring, t.amplitude);
             return out;
           })
      .def("support", [](const PureState& s) {
        std::vector<std::string> out;
        for (auto i : s.support()) out.push_back(to_bitstring(i, s.n_particles()));
        return out;
      })
      .def("norm", &PureState::norm)
      .def("to_json", [](const PureState& s) { return state_to_json(s).dump(); })
      .def_static("from_json", [](const std::string& text) {
        try {
          return state_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(e.what());
        }
      });

  m.def(
      "build_state",
      [](const std::vector<std::pair<std::string, Complex>>& terms, int n) {
        std::vector<BasisTerm> bt;
        for (const auto& [bits, a] : terms) bt.push_back({bits, a});
        return build_state(bt, n);
      },
      py::arg("terms"), py::arg("n"));
  m.def("ghz_state", &ghz_state, py::arg("n"));
  m.def("w_family_state", &w_family_state, py::arg("n") = 3);
  m.def("random_state", &random_state, py::arg("n"), py::arg("seed"));
  m.def(
      "random_on_support",
      [](const std::vector<std::string>& bits, double min_magnitude, std::uint64_t seed) {
        return random_on_support(support_of(bits), min_magnitude, seed);
      },
      py::arg("support"), py::arg("min_magnitude"), py::arg("seed"));

  m.def(
      "enumerate_subsets",
      [](int n, int traced) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_subsets(n, traced)) out.push_back(s.particles());
        return out;
      },
      py::arg("n"), py::arg("traced"));
  m.def(
      "partial_trace",
      [](const PureState& s, const std::vector<int>& kept) {
        return to_numpy(partial_trace(s, mask_of(s, kept)).entries());
      },
      py::arg("state"), py::arg("kept"));
  m.def(
      "reduced_spectrum",
      [](const PureState& s, const std::vector<int>& kept) { return reduced_spectrum(s, mask_of(s, kept)); },
      py::arg("state"), py::arg("kept"));
  m.def(
      "hermitian_eigenvalues", [](const ComplexArray& a) { return hermitian_eigenvalues(from_numpy(a)); },
      py::arg("matrix"));
  m.def(
      "von_neumann_entropy",
      [](const ComplexArray& a) {
        auto mat = from_numpy(a);
        const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(mat.rows()))));
        return von_neumann_entropy(DensityMatrix(SubsetMask::all(n), std::move(mat)));
      },
      py::arg("matrix"));

  m.def(
      "full_report",
      [](const PureState& s, bool all_subsets, double tolerance) {
        return report_entries(full_report(
            s, all_subsets ? SubsetScope::AllProper : SubsetScope::SymmetryCompleted, with_zero(tolerance)));
      },
      py::arg("state"), py::arg("all_subsets") = false, py::arg("tolerance") = Tolerances{}.zero);
  m.def(
      "eta_measure", [](const PureState& s, double tolerance) { return eta_measure(s, with_zero(tolerance)); },
      py::arg("state"), py::arg("tolerance") = Tolerances{}.zero);
  m.def(
      "classify",
      [](const PureState& s, double tolerance) {
        const auto c = classify(s, with_zero(tolerance));
        py::dict out;
        out["verdict"] = to_string(c.verdict);
        out["eta"] = c.eta;
        out["partition"] = c.partition;
        out["entropies"] = report_entries(c.report);
        return out;
      },
      py::arg("state"), py::arg("tolerance") = Tolerances{}.zero);
  m.def(
      "factorization_oracle",
      [](const PureState& s, const std::vector<int>& block, double tolerance) {
        return factorization_oracle(s, mask_of(s, block), with_zero(tolerance));
      },
      py::arg("state"), py::arg("block"), py::arg("tolerance") = Tolerances{}.zero);
  m.def(
      "extract_factors",
      [](const PureState& s, const std::vector<int>& block) { return extract_factors(s, mask_of(s, block)); },
      py::arg("state"), py::arg("block"));

  m.def(
      "eta_objective",
      [](const std::vector<double>& params, const std::vector<std::string>& bits) {
        return eta_objective(params, support_of(bits));
      },
      py::arg("params"), py::arg("support"));
  m.def(
      "maximize_eta",
      [](const std::vector<std::string>& bits, int restarts, int max_iters, std::uint64_t seed) {
        const auto r = maximize_eta(support_of(bits), {restarts, max_iters, seed});
        py::dict out;
        out["best_state"] = r.best_state;
        out["best_eta"] = r.best_eta;
        out["restarts_used"] = r.restarts_used;
        out["converged"] = r.converged;
        std::vector<std::tuple<int, int, double>> history;
        for (const auto& h : r.history) history.emplace_back(h.restart, h.iteration, h.eta);
        out["history"] = history;
        return out;
      },
      py::arg("support"), py::arg("restarts") = 16, py::arg("max_iters") = 2000, py::arg("seed") = 0);

  m.def("basis_label_map", &basis_label_map);
  m.def(
      "reproduce_table1",
      [](int trials, std::uint64_t seed) {
        const auto rows = reproduce_table1(trials, seed);
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["pattern"] = r.pattern_label;
          d["support"] = r.support.bitstrings();
          d["case"] = to_string(r.category);
          d["partition"] = r.witness_partition;
          out.append(d);
        }
        return out;
      },
      py::arg("trials") = 5, py::arg("seed") = 1);
}
