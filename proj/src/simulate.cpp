#include "diagsynth/simulate.hpp"

#include <cmath>

namespace diagsynth {

MonomialOperator identity_operator(int n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("identity_operator: qubit count out of range");
  }
  MonomialOperator m;
  m.n = n;
  const std::size_t dim = std::size_t{1} << n;
  m.perm.resize(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    m.perm[x] = static_cast<std::uint32_t>(x);
  }
  m.phase.assign(dim, 0.0);
  return m;
}

MonomialOperator gate_to_monomial(const Gate& g, int n) {
  MonomialOperator m = identity_operator(n);
  const std::size_t dim = m.dim();
  if (const auto* rot = std::get_if<Rotation>(&g)) {
    if (rot->target < 1 || rot->target > n) {
      throw std::invalid_argument("gate_to_monomial: target out of range");
    }
    for (std::size_t x = 0; x < dim; ++x) {
      m.phase[x] = bit_of(x, rot->target, n) == 0 ? rot->angle : -rot->angle;
    }
  } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
    if (cf->control < 1 || cf->control >= cf->target || cf->target > n) {
      throw std::invalid_argument("gate_to_monomial: bad control/target pair");
    }
    const std::size_t flip = std::size_t{1} << (n - cf->target);
    for (std::size_t x = 0; x < dim; ++x) {
      if (bit_of(x, cf->control, n) == 1) {
        m.perm[x] = static_cast<std::uint32_t>(x ^ flip);
        m.phase[x] = bit_of(x, cf->target, n) == 0 ? cf->flip_phase : -cf->flip_phase;
      }
    }
  } else {
    m.global = std::get<GlobalPhase>(g).angle;
  }
  return m;
}

MonomialOperator compose(const MonomialOperator& after,
                         const MonomialOperator& before) {
  if (after.n != before.n) {
    throw std::invalid_argument("compose: operator sizes differ");
  }
  MonomialOperator out;
  out.n = after.n;
  out.global = after.global + before.global;
  const std::size_t dim = after.dim();
  out.perm.resize(dim);
  out.phase.resize(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const std::uint32_t mid = after.perm[x];
    out.perm[x] = before.perm[mid];
    out.phase[x] = after.phase[x] + before.phase[mid];
  }
  return out;
}

MonomialOperator evaluate(const Circuit& c) {
  validate_circuit(c);
  MonomialOperator acc = identity_operator(c.n);
  const std::size_t dim = acc.dim();
  // In-place left application acc <- gate * acc, one pass per gate.
  for (const Gate& g : c.gates) {
    if (const auto* rot = std::get_if<Rotation>(&g)) {
      const std::size_t half = std::size_t{1} << (c.n - rot->target);
      for (std::size_t x = 0; x < dim; ++x) {
        acc.phase[x] += (x & half) ? -rot->angle : rot->angle;
      }
    } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
      const std::size_t ctrl = std::size_t{1} << (c.n - cf->control);
      const std::size_t flip = std::size_t{1} << (c.n - cf->target);
      for (std::size_t x = 0; x < dim; ++x) {
        if ((x & ctrl) && !(x & flip)) {
          const std::size_t y = x | flip;
          std::swap(acc.perm[x], acc.perm[y]);
          std::swap(acc.phase[x], acc.phase[y]);
          acc.phase[x] += cf->flip_phase;
          acc.phase[y] -= cf->flip_phase;
        }
      }
    } else {
      acc.global += std::get<GlobalPhase>(g).angle;
    }
  }
  return acc;
}

bool is_diagonal(const MonomialOperator& m) {
  for (std::size_t x = 0; x < m.dim(); ++x) {
    if (m.perm[x] != x) {
      return false;
    }
  }
  return true;
}

std::vector<double> tail_block_angles(const MonomialOperator& m, double tol) {
  if (!is_diagonal(m)) {
    throw std::invalid_argument("tail_block_angles: operator is not diagonal");
  }
  std::vector<double> gamma;
  gamma.reserve(m.dim() / 2);
  for (std::size_t j = 0; 2 * j + 1 < m.dim(); ++j) {
    const double up = m.phase[2 * j];
    const double down = m.phase[2 * j + 1];
    if (std::abs(up + down) > tol) {
      throw sequence_error("not special-unitary blocks");
    }
    gamma.push_back(up);
  }
  return gamma;
}

double max_phase_error(const MonomialOperator& m, const PhaseVector& target) {
  if (!is_diagonal(m)) {
    throw std::invalid_argument("max_phase_error: operator is not diagonal");
  }
  if (m.n != target.n) {
    throw std::invalid_argument("max_phase_error: sizes differ");
  }
  double worst = 0.0;
  for (std::size_t x = 0; x < m.dim(); ++x) {
    const double d = std::abs(wrap_angle(m.phase[x] + m.global - target.phases[x]));
    worst = std::max(worst, d);
  }
  return worst;
}

ComplexMatrix dense_gate(const Gate& g, int n) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix mat(dim, std::vector<std::complex<double>>(dim, 0.0));
  if (const auto* rot = std::get_if<Rotation>(&g)) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double sign = bit_of(x, rot->target, n) == 0 ? 1.0 : -1.0;
      mat[x][x] = std::polar(1.0, sign * rot->angle);
    }
  } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
    // pi_0 branch keeps the state, pi_1 branch applies X on the target line.
    for (std::size_t x = 0; x < dim; ++x) {
      if (bit_of(x, cf->control, n) == 0) {
        mat[x][x] = 1.0;
      } else {
        const std::size_t y = x ^ (std::size_t{1} << (n - cf->target));
        const double sign = bit_of(x, cf->target, n) == 0 ? 1.0 : -1.0;
        mat[x][y] = std::polar(1.0, sign * cf->flip_phase);
      }
    }
  } else {
    const auto phase = std::polar(1.0, std::get<GlobalPhase>(g).angle);
    for (std::size_t x = 0; x < dim; ++x) {
      mat[x][x] = phase;
    }
  }
  return mat;
}

ComplexMatrix dense_matrix(const Circuit& c) {
  if (c.n > 8) {
    throw std::invalid_argument("dense oracle capped");
  }
  validate_circuit(c);
  const std::size_t dim = std::size_t{1} << c.n;
  ComplexMatrix acc(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t x = 0; x < dim; ++x) {
    acc[x][x] = 1.0;
  }
  for (const Gate& g : c.gates) {
    const ComplexMatrix gm = dense_gate(g, c.n);
    ComplexMatrix next(dim, std::vector<std::complex<double>>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (gm[i][k] == std::complex<double>{0.0, 0.0}) {
          continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
          next[i][j] += gm[i][k] * acc[k][j];
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ComplexMatrix to_dense(const MonomialOperator& m) {
  const std::size_t dim = m.dim();
  ComplexMatrix mat(dim, std::vector<std::complex<double>>(dim, 0.0));
  for (std::size_t x = 0; x < dim; ++x) {
    mat[x][m.perm[x]] = std::polar(1.0, m.phase[x] + m.global);
  }
  return mat;
}

}  // namespace diagsynth
