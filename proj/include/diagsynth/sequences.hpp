#pragma once

#include <cstdint>
#include <vector>

#include "diagsynth/types.hpp"

namespace diagsynth {

/// Schedule of control lines for the flip gates of one tail layer:
/// 2^(n-1) values from {1..n-1} (empty for n = 1, where no tail exists).
struct ControlSequence {
  int n = 1;
  std::vector<int> entries;

  ControlSequence(int n_, std::vector<int> entries_);
};

/// Generalized schedule: one subset of {1..n-1} per position, so several
/// flips may sit between consecutive rotations. Sets are kept sorted.
struct GeneralControlSequence {
  int n = 1;
  std::vector<std::vector<int>> entries;

  GeneralControlSequence(int n_, std::vector<std::vector<int>> entries_);
  std::size_t length() const { return entries.size(); }
};

struct ValidityReport {
  bool parity_ok = false;
  bool coverage_ok = false;
  std::size_t gap_count = 0;
};

/// Perfect-binary-tree sequence with the trailing 1 appended:
/// a_n = (a_{n-1}+1) o {1} o (a_{n-1}+1), a_2 = {1}, result a_n o {1}.
ControlSequence pbt_sequence(int n);

/// Column-permuted family with the same total flip count as pbt, defined for
/// odd qubit counts n = 2*depth + 1 (two layers are added per step).
ControlSequence constant_gap_sequence(int depth);

/// Multi-control family whose diagram nests a scaled-down copy of each row
/// into the next: every second position adds control line n-1 alone.
GeneralControlSequence nested_copy_sequence(int n);

/// Each integer entry becomes the singleton set {entry}.
GeneralControlSequence lift(const ControlSequence& seq);

/// Prefix parities as bitmasks over block-index bits: mask bit for line m is
/// 1 << (n-1-m), matching rho_to_index. Result has length()+1 entries,
/// P_0 = 0 up to the full-sequence parity P_len.
std::vector<std::uint32_t> prefix_parity_masks(const GeneralControlSequence& seq);

/// s[m-1][i] = (occurrences of m among entries[0..i-1]) mod 2,
/// for m in 1..n-1 and i in 0..2^(n-1).
std::vector<std::vector<std::uint8_t>> parity_trace(const GeneralControlSequence& seq);

/// parity_ok: every line is flipped an even number of times (the tail
/// evaluates to a diagonal operator). coverage_ok: the prefix-parity columns
/// at i = 0..2^(n-1)-1 are pairwise distinct, i.e. enumerate {0,1}^(n-1)
/// (the sign matrix is invertible). gap_count: total number of flip gates.
ValidityReport validate(const GeneralControlSequence& seq);

/// Renumber control lines by a bijection sigma of {1..n-1}; sigma[m-1] is the
/// image of line m. Validity is preserved.
GeneralControlSequence permute_rows(const GeneralControlSequence& seq,
                                    const std::vector<int>& sigma);

}  // namespace diagsynth
