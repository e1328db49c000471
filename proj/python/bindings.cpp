#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diagsynth/diagram.hpp"
#include "diagsynth/io.hpp"
#include "diagsynth/sign_matrix.hpp"
#include "diagsynth/simulate.hpp"
#include "diagsynth/synthesis.hpp"

namespace py = pybind11;
using namespace diagsynth;

namespace {

std::vector<std::vector<int>> sign_matrix_rows(const SignMatrix& r) {
  std::vector<std::vector<int>> rows(r.dim(), std::vector<int>(r.dim()));
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      rows[i][j] = r.entry(i, j);
    }
  }
  return rows;
}

Circuit decompose_phases(const std::vector<double>& raw, const std::string& family,
                         double flip_phase) {
  const PhaseVector target = pad_phases(raw);
  return decompose(target, make_plan(family, target.n), flip_phase);
}

}  // namespace

PYBIND11_MODULE(_diagsynth, m) {
  m.doc() = "Synthesis of diagonal unitaries into rotation, controlled-flip "
            "and global-phase gates";

  py::register_exception<io_error>(m, "IoError", PyExc_ValueError);
  py::register_exception<sequence_error>(m, "DegenerateSequenceError", PyExc_ValueError);

  py::class_<GeneralControlSequence>(m, "ControlSequence")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"),
           py::arg("entries"))
      .def_readonly("n", &GeneralControlSequence::n)
      .def_readonly("entries", &GeneralControlSequence::entries)
      .def("__len__", &GeneralControlSequence::length)
      .def("__repr__", [](const GeneralControlSequence& s) {
        return "<ControlSequence n=" + std::to_string(s.n) + " length=" +
               std::to_string(s.length()) + ">";
      });

  py::class_<ValidityReport>(m, "ValidityReport")
      .def_readonly("parity_ok", &ValidityReport::parity_ok)
      .def_readonly("coverage_ok", &ValidityReport::coverage_ok)
      .def_readonly("gap_count", &ValidityReport::gap_count);

  py::class_<GapStats>(m, "GapStats")
      .def_readonly("per_row_gaps", &GapStats::per_row_gaps)
      .def_readonly("total", &GapStats::total)
      .def_readonly("doubling_ok", &GapStats::doubling_ok);

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("n", &Circuit::n)
      .def("__len__", [](const Circuit& c) { return c.gates.size(); })
      .def("to_json", &circuit_to_json)
      .def_static("from_json", &circuit_from_json)
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit n=" + std::to_string(c.n) + " gates=" +
               std::to_string(c.gates.size()) + ">";
      });

  py::class_<MonomialOperator>(m, "MonomialOperator")
      .def_readonly("n", &MonomialOperator::n)
      .def_readonly("perm", &MonomialOperator::perm)
      .def_readonly("phase", &MonomialOperator::phase)
      .def_readonly("global_phase", &MonomialOperator::global);

  m.def("pbt_sequence", [](int n) { return lift(pbt_sequence(n)); }, py::arg("n"));
  m.def("constant_gap_sequence",
        [](int depth) { return lift(constant_gap_sequence(depth)); }, py::arg("depth"));
  m.def("nested_copy_sequence", &nested_copy_sequence, py::arg("n"));
  m.def("validate", &validate, py::arg("seq"));
  m.def("parity_trace", &parity_trace, py::arg("seq"));
  m.def("permute_rows", &permute_rows, py::arg("seq"), py::arg("sigma"));

  m.def("build_r", [](const GeneralControlSequence& seq) {
          return sign_matrix_rows(build_r(seq));
        },
        py::arg("seq"), "Sign matrix as nested lists of +-1");
  m.def("apply_r",
        [](const GeneralControlSequence& seq, const std::vector<double>& beta) {
          return apply_r(seq, beta);
        },
        py::arg("seq"), py::arg("beta"));
  m.def("invert_r",
        [](const GeneralControlSequence& seq, const std::vector<double>& gamma) {
          return invert_r(seq, gamma);
        },
        py::arg("seq"), py::arg("gamma"));
  m.def("kron_column_permutation", &kron_column_permutation, py::arg("seq"));

  m.def("pad_phases", [](const std::vector<double>& raw) {
          const PhaseVector p = pad_phases(raw);
          return std::make_pair(p.n, p.phases);
        },
        py::arg("phases"), "Returns (n, padded phases)");
  m.def("decompose", &decompose_phases, py::arg("phases"), py::arg("family") = "pbt",
        py::arg("flip_phase") = 0.0,
        "Pad the phases and synthesize a circuit with the given sequence family");
  m.def("gate_counts", [](const Circuit& c) {
          const GateCounts g = gate_counts(c);
          py::dict d;
          d["controls"] = g.controls;
          d["rotations"] = g.rotations;
          d["global_phases"] = g.global_phases;
          return d;
        },
        py::arg("circuit"));
  m.def("export_qasm", &export_qasm, py::arg("circuit"));
  m.def("wrap_circuit_angles", &wrap_circuit_angles, py::arg("circuit"));

  m.def("evaluate", &evaluate, py::arg("circuit"));
  m.def("is_diagonal", &is_diagonal, py::arg("operator"));
  m.def("max_phase_error",
        [](const MonomialOperator& op, const std::vector<double>& raw) {
          std::vector<double> phases = raw;
          phases.resize(std::size_t{1} << op.n, 0.0);
          return max_phase_error(op, PhaseVector(op.n, std::move(phases)));
        },
        py::arg("operator"), py::arg("phases"),
        "Max angular distance (mod 2*pi) to the given phases, zero-padded");

  m.def("render_text", &render_text, py::arg("seq"));
  m.def("render_svg", &render_svg, py::arg("seq"));
  m.def("gap_stats", &gap_stats, py::arg("seq"));
}
