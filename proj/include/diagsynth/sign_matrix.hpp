#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diagsynth/sequences.hpp"

namespace diagsynth {

/// Square {+1,-1} matrix stored as packed bit rows (bit set means -1).
/// Row j is the block index (binary rho(j)), column i the rotation position.
class SignMatrix {
 public:
  explicit SignMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int entry(std::size_t row, std::size_t col) const {
    return (words_[row * wpr_ + col / 64] >> (col % 64)) & 1u ? -1 : 1;
  }
  void set_negative(std::size_t row, std::size_t col) {
    words_[row * wpr_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }

  /// Packed words of one row; bits past dim() are zero.
  std::span<const std::uint64_t> row_words(std::size_t row) const {
    return {words_.data() + row * wpr_, wpr_};
  }
  std::size_t words_per_row() const { return wpr_; }

 private:
  std::size_t dim_;
  std::size_t wpr_;
  std::vector<std::uint64_t> words_;
};

/// The linear map gamma = r * beta between tail rotation angles and block
/// angles: entry[j][i] = (-1)^(popcount(j & P_{i-1})) with P the prefix
/// parity masks of the sequence. Column 1 is all ones.
SignMatrix build_r(const GeneralControlSequence& seq);

/// gamma = r * beta without materializing r.
std::vector<double> apply_r(const GeneralControlSequence& seq,
                            std::span<const double> beta);

/// beta = r^T * gamma / 2^(n-1); valid because r * r^T = 2^(n-1) * I for
/// coverage-valid sequences. Throws sequence_error otherwise.
std::vector<double> invert_r(const GeneralControlSequence& seq,
                             std::span<const double> gamma);

/// sigma with r[.][i] = column sigma(i) of the (n-1)-fold Kronecker power of
/// [[1,1],[1,-1]] under the natural row order; sigma(i) = rho_to_index of the
/// prefix parity vector before position i. Throws sequence_error when the
/// sequence fails coverage (sigma would repeat).
std::vector<std::size_t> kron_column_permutation(const GeneralControlSequence& seq);

/// r^T * gamma in O(n * 2^n): butterfly transform plus the column gather.
/// Throws sequence_error when the sequence fails coverage.
std::vector<double> fast_apply_transpose(const GeneralControlSequence& seq,
                                         std::span<const double> gamma);

/// In-place Walsh-Hadamard transform with the +-1 kernel [[1,1],[1,-1]];
/// data.size() must be a power of two.
void walsh_hadamard_inplace(std::span<double> data);

}  // namespace diagsynth
