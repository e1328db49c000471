#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace diagsynth {

/// Raised on malformed input files or serialized data.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a control sequence cannot drive a non-degenerate decomposition.
struct sequence_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Convention used throughout: qubit 1 is the most significant tensor factor,
// so basis index x carries the state of qubit m at bit weight 2^(n-m).

/// Bit of basis index x belonging to qubit m (1-based), on n qubits.
int bit_of(std::uint64_t x, int m, int n);

/// Block-index bit vector rho; rho[0] (= rho_1) is the most significant bit.
using BitVector = std::vector<std::uint8_t>;

/// j = sum_i 2^(n-1-i) * rho_i.
std::uint64_t rho_to_index(const BitVector& rho);

/// Inverse of rho_to_index on [0, 2^(n-1)); result has n-1 bits.
BitVector index_to_rho(std::uint64_t j, int n);

/// Shift an angle by a multiple of 2*pi into (-pi, pi].
double wrap_angle(double a);

/// Target of a synthesis run: the 2^n phase angles of a diagonal unitary
/// diag(e^{i*phases[0]}, ..., e^{i*phases[2^n - 1]}).
struct PhaseVector {
  int n = 1;
  std::vector<double> phases;

  PhaseVector(int n_, std::vector<double> phases_);
  std::size_t dim() const { return phases.size(); }
};

/// Embed an arbitrary-length phase list into the smallest 2^n space,
/// padding with exact zeros (identity block on the extra states).
PhaseVector pad_phases(const std::vector<double>& raw);

/// diag(e^{i*angle}, e^{-i*angle}) on the target line.
struct Rotation {
  int target = 1;
  double angle = 0.0;
};

/// Applies X = [[0, e^{i*flip_phase}], [e^{-i*flip_phase}, 0]] to the target
/// line when the control line is 1. flip_phase = 0 is the standard bit flip;
/// any value keeps X an involution with zero diagonal.
struct ControlFlip {
  int control = 1;
  int target = 2;
  double flip_phase = 0.0;
};

/// Scalar factor e^{i*angle}.
struct GlobalPhase {
  double angle = 0.0;
};

using Gate = std::variant<Rotation, ControlFlip, GlobalPhase>;

/// Gate list in application order: gates.front() acts first on states,
/// i.e. it is the rightmost factor of the corresponding matrix product.
struct Circuit {
  int n = 1;
  std::vector<Gate> gates;
};

/// Throws std::invalid_argument unless all gate indices are within 1..n
/// and every ControlFlip has control < target.
void validate_circuit(const Circuit& c);

/// Matrix with exactly one nonzero unit-modulus entry per row: row x holds
/// e^{i*(phase[x] + global)} in column perm[x]. Every gate above is of this
/// form, so circuit evaluation stays exact in the permutation part.
struct MonomialOperator {
  int n = 1;
  std::vector<std::uint32_t> perm;
  std::vector<double> phase;
  double global = 0.0;

  std::size_t dim() const { return perm.size(); }
};

}  // namespace diagsynth
