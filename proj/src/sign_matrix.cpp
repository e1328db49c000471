#include "diagsynth/sign_matrix.hpp"

#include <bit>

namespace diagsynth {

namespace {

// Prefix parity masks restricted to the column positions (P_0..P_{len-1}),
// i.e. the column selectors of r. Never includes the full-sequence parity.
std::vector<std::uint32_t> column_masks(const GeneralControlSequence& seq) {
  auto prefix = prefix_parity_masks(seq);
  prefix.pop_back();
  return prefix;
}

// Coverage gate shared by the transpose paths.
std::vector<std::uint32_t> checked_column_masks(const GeneralControlSequence& seq) {
  auto masks = column_masks(seq);
  std::vector<bool> seen(masks.size(), false);
  for (std::uint32_t p : masks) {
    if (seen[p]) {
      throw sequence_error("degenerate sequence: r not invertible by transpose");
    }
    seen[p] = true;
  }
  return masks;
}

}  // namespace

SignMatrix::SignMatrix(std::size_t dim)
    : dim_(dim), wpr_((dim + 63) / 64), words_(dim * wpr_, 0) {}

SignMatrix build_r(const GeneralControlSequence& seq) {
  const auto masks = column_masks(seq);
  const std::size_t dim = masks.size();
  SignMatrix r(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if (std::popcount(static_cast<std::uint32_t>(row) & masks[col]) & 1) {
        r.set_negative(row, col);
      }
    }
  }
  return r;
}

void walsh_hadamard_inplace(std::span<double> data) {
  const std::size_t size = data.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("walsh_hadamard: length must be a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double lo = data[i];
        const double hi = data[i + half];
        data[i] = lo + hi;
        data[i + half] = lo - hi;
      }
    }
  }
}

std::vector<double> apply_r(const GeneralControlSequence& seq,
                            std::span<const double> beta) {
  const auto masks = column_masks(seq);
  const std::size_t dim = masks.size();
  if (beta.size() != dim) {
    throw std::invalid_argument("apply_r: beta length must be 2^(n-1)");
  }

  // Fast path when the column selectors are distinct: r = W * scatter.
  std::vector<bool> seen(dim, false);
  bool distinct = true;
  for (std::uint32_t p : masks) {
    if (seen[p]) {
      distinct = false;
      break;
    }
    seen[p] = true;
  }
  if (distinct) {
    std::vector<double> gamma(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      gamma[masks[i]] = beta[i];
    }
    walsh_hadamard_inplace(gamma);
    return gamma;
  }

  std::vector<double> gamma(dim, 0.0);
  for (std::size_t row = 0; row < dim; ++row) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const int sign =
          std::popcount(static_cast<std::uint32_t>(row) & masks[i]) & 1 ? -1 : 1;
      acc += sign * beta[i];
    }
    gamma[row] = acc;
  }
  return gamma;
}

std::vector<double> fast_apply_transpose(const GeneralControlSequence& seq,
                                         std::span<const double> gamma) {
  const auto masks = checked_column_masks(seq);
  const std::size_t dim = masks.size();
  if (gamma.size() != dim) {
    throw std::invalid_argument("fast_apply_transpose: gamma length must be 2^(n-1)");
  }
  // (r^T gamma)_i = WHT(gamma)[P_{i-1}].
  std::vector<double> wht(gamma.begin(), gamma.end());
  walsh_hadamard_inplace(wht);
  std::vector<double> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = wht[masks[i]];
  }
  return out;
}

std::vector<double> invert_r(const GeneralControlSequence& seq,
                             std::span<const double> gamma) {
  std::vector<double> beta = fast_apply_transpose(seq, gamma);
  const double scale = 1.0 / static_cast<double>(beta.size());
  for (double& b : beta) {
    b *= scale;
  }
  return beta;
}

std::vector<std::size_t> kron_column_permutation(const GeneralControlSequence& seq) {
  const auto masks = checked_column_masks(seq);
  return {masks.begin(), masks.end()};
}

}  // namespace diagsynth
