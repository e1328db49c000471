#pragma once

#include <string>
#include <vector>

#include "diagsynth/sequences.hpp"

namespace diagsynth {

/// Rail-and-gap diagram: one two-line row per control line m, the active rail
/// following the prefix parity, with a vertical mark at every flip. Columns
/// are labeled 0..2^(n-1). Output is a pure function of the sequence.
std::string render_text(const GeneralControlSequence& seq);

/// Same diagram as SVG. Frozen geometry: column width 10, row pitch 30.
std::string render_svg(const GeneralControlSequence& seq);

struct GapStats {
  std::vector<std::size_t> per_row_gaps;  // per_row_gaps[m-1] = flips of line m
  std::size_t total = 0;
  bool doubling_ok = false;
};

/// doubling_ok: with rows sorted by gap count, the cumulative count over the
/// first k rows reaches 2^k for every k — the lower bound a non-degenerate
/// diagram must meet, attained with equality by the binary-tree family.
GapStats gap_stats(const GeneralControlSequence& seq);

}  // namespace diagsynth
