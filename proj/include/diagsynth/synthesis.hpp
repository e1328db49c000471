#pragma once

#include <span>
#include <string>
#include <vector>

#include "diagsynth/sequences.hpp"
#include "diagsynth/types.hpp"

namespace diagsynth {

/// One recursion step of the target phases: the coarser diagonal keeps
/// alpha_bar while the tail realizes gamma.
struct LevelSplit {
  std::vector<double> alpha_bar;
  std::vector<double> gamma;
};

/// alpha_bar[i] = (alpha[2i] + alpha[2i+1]) / 2,
/// gamma[i]     = (alpha[2i] - alpha[2i+1]) / 2  (0-based pairs).
LevelSplit split_level(std::span<const double> alpha);

/// One control sequence per recursion level k = 2..n (levels[k-2]).
struct SequencePlan {
  std::vector<GeneralControlSequence> levels;
  std::string family = "custom";

  int qubit_count() const { return static_cast<int>(levels.size()) + 1; }
  const GeneralControlSequence& level(int k) const;
};

/// family is one of "pbt", "constgap", "nested". The constgap family uses
/// constant-gap sequences at odd levels >= 3 and pbt elsewhere.
SequencePlan make_plan(const std::string& family, int n);

/// Plan with the given sequence at its own level and pbt at lower levels.
SequencePlan custom_plan(GeneralControlSequence top);

/// Tail gates in application order: for i = last position down to the first,
/// the flips of entries[i] in ascending line order (they commute), then the
/// rotation by beta[i] on the target line. beta and entries must have equal
/// length; no length restriction beyond that, which permits deliberately
/// parity-broken tails in tests.
std::vector<Gate> build_tail(std::span<const double> beta,
                             std::span<const std::vector<int>> entries,
                             int target, double flip_phase = 0.0);

/// Tail for a full level sequence; the target line is seq.n.
std::vector<Gate> build_tail(std::span<const double> beta,
                             const GeneralControlSequence& seq,
                             double flip_phase = 0.0);

/// Exact synthesis: a circuit whose evaluation is diagonal with the target
/// phases. Emission order per level: sub-circuit for the coarser diagonal
/// first, then the tail. flip_phase parameterizes the ControlFlip gates and
/// never enters the solved angles.
Circuit decompose(const PhaseVector& target, const SequencePlan& plan,
                  double flip_phase = 0.0);

struct GateCounts {
  std::size_t controls = 0;
  std::size_t rotations = 0;
  std::size_t global_phases = 0;
};

GateCounts gate_counts(const Circuit& c);

/// Shift every gate angle into (-pi, pi] by multiples of 2*pi.
Circuit wrap_circuit_angles(Circuit c);

/// OpenQASM 3 text. Rotation(t, a) becomes rz(-2a) on wire t-1, ControlFlip
/// with flip_phase 0 becomes cx, GlobalPhase becomes gphase. Throws
/// std::invalid_argument for nonzero flip_phase (no standard gate).
std::string export_qasm(const Circuit& c);

}  // namespace diagsynth
