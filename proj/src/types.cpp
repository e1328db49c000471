#include "diagsynth/types.hpp"

#include <cmath>

namespace diagsynth {

int bit_of(std::uint64_t x, int m, int n) {
  if (n < 1 || m < 1 || m > n) {
    throw std::invalid_argument("bit_of: qubit index out of range");
  }
  if (x >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("bit_of: basis index out of range");
  }
  return static_cast<int>((x >> (n - m)) & 1u);
}

std::uint64_t rho_to_index(const BitVector& rho) {
  std::uint64_t j = 0;
  for (std::uint8_t b : rho) {
    j = (j << 1) | (b & 1u);
  }
  return j;
}

BitVector index_to_rho(std::uint64_t j, int n) {
  if (n < 1) {
    throw std::invalid_argument("index_to_rho: qubit count must be positive");
  }
  const int len = n - 1;
  if (j >= (std::uint64_t{1} << len)) {
    throw std::invalid_argument("index_to_rho: block index out of range");
  }
  BitVector rho(len);
  for (int i = 0; i < len; ++i) {
    rho[i] = static_cast<std::uint8_t>((j >> (len - 1 - i)) & 1u);
  }
  return rho;
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(a, two_pi);  // lands in [-pi, pi]
  if (w <= -std::numbers::pi) {
    w += two_pi;
  }
  return w;
}

PhaseVector::PhaseVector(int n_, std::vector<double> phases_)
    : n(n_), phases(std::move(phases_)) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("PhaseVector: qubit count out of range");
  }
  if (phases.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("PhaseVector: need 2^n phases");
  }
  for (double p : phases) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument("PhaseVector: phases must be finite");
    }
  }
}

PhaseVector pad_phases(const std::vector<double>& raw) {
  if (raw.empty()) {
    throw std::invalid_argument("empty phase list");
  }
  int n = 1;
  while ((std::size_t{1} << n) < raw.size()) {
    ++n;
  }
  std::vector<double> phases = raw;
  phases.resize(std::size_t{1} << n, 0.0);
  return PhaseVector(n, std::move(phases));
}

void validate_circuit(const Circuit& c) {
  if (c.n < 1) {
    throw std::invalid_argument("circuit: qubit count must be positive");
  }
  for (const Gate& g : c.gates) {
    if (const auto* rot = std::get_if<Rotation>(&g)) {
      if (rot->target < 1 || rot->target > c.n) {
        throw std::invalid_argument("circuit: rotation target out of range");
      }
    } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
      if (cf->control < 1 || cf->target > c.n || cf->control >= cf->target) {
        throw std::invalid_argument(
            "circuit: control flip needs 1 <= control < target <= n");
      }
    }
  }
}

}  // namespace diagsynth
