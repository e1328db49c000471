#include "diagsynth/diagram.hpp"

#include <algorithm>

namespace diagsynth {

namespace {

std::size_t digits(std::size_t v) {
  std::size_t d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

std::string render_text(const GeneralControlSequence& seq) {
  const auto trace = parity_trace(seq);
  const std::size_t columns = seq.length() + 1;
  // Cell layout: one char reserved for the gap mark at the left edge, the
  // rest carries the rail of the active level.
  const std::size_t cell = std::max<std::size_t>(3, digits(seq.length()) + 1);
  const std::size_t label_width = digits(static_cast<std::size_t>(seq.n)) + 3;

  std::string out;
  out += std::string(label_width, ' ');
  for (std::size_t i = 0; i < columns; ++i) {
    out += pad_left(std::to_string(i), cell);
  }
  out += '\n';

  for (int m = 1; m <= seq.n - 1; ++m) {
    const auto& row = trace[m - 1];
    std::string hi = pad_left("m=" + std::to_string(m), label_width);
    std::string lo = std::string(label_width, ' ');
    for (std::size_t i = 0; i < columns; ++i) {
      const bool flip = i >= 1 && std::binary_search(seq.entries[i - 1].begin(),
                                                     seq.entries[i - 1].end(), m);
      const char mark = flip ? '|' : ' ';
      const std::string rail(cell - 1, '-');
      const std::string gap(cell - 1, ' ');
      hi += mark + (row[i] ? rail : gap);
      lo += mark + (row[i] ? gap : rail);
    }
    out += hi;
    out += '\n';
    out += lo;
    out += '\n';
  }
  return out;
}

std::string render_svg(const GeneralControlSequence& seq) {
  // Frozen geometry: column width 10, row pitch 30, left margin 30.
  constexpr int kColumn = 10;
  constexpr int kPitch = 30;
  constexpr int kLeft = 30;
  constexpr int kTop = 10;
  const int rows = seq.n - 1;
  const int len = static_cast<int>(seq.length());
  const int width = kLeft + (len + 1) * kColumn;
  const int height = kTop + rows * kPitch + 10;

  const auto trace = parity_trace(seq);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" stroke=\"black\" stroke-width=\"1\" font-size=\"10\">\n";
  for (int m = 1; m <= rows; ++m) {
    const int base = kTop + (m - 1) * kPitch;
    const int y_hi = base + 5;
    const int y_lo = base + 20;
    out += "<text x=\"2\" y=\"" + std::to_string(base + 15) +
           "\" stroke=\"none\" fill=\"black\">m=" + std::to_string(m) + "</text>\n";
    const auto& row = trace[m - 1];
    for (int i = 0; i <= len; ++i) {
      const int x = kLeft + i * kColumn;
      const int y = row[i] ? y_hi : y_lo;
      out += "<line class=\"rail\" x1=\"" + std::to_string(x) + "\" y1=\"" +
             std::to_string(y) + "\" x2=\"" + std::to_string(x + kColumn) +
             "\" y2=\"" + std::to_string(y) + "\"/>\n";
      const bool flip = i >= 1 && std::binary_search(seq.entries[i - 1].begin(),
                                                     seq.entries[i - 1].end(), m);
      if (flip) {
        out += "<line class=\"gap\" x1=\"" + std::to_string(x) + "\" y1=\"" +
               std::to_string(y_hi) + "\" x2=\"" + std::to_string(x) +
               "\" y2=\"" + std::to_string(y_lo) + "\"/>\n";
      }
    }
  }
  out += "</svg>\n";
  return out;
}

GapStats gap_stats(const GeneralControlSequence& seq) {
  GapStats stats;
  stats.per_row_gaps.assign(seq.n - 1, 0);
  for (const auto& set : seq.entries) {
    for (int m : set) {
      ++stats.per_row_gaps[m - 1];
      ++stats.total;
    }
  }
  // Lower bound from the diagram: the rows with the k smallest gap counts
  // must jointly cut the axis into at least 2^k runs.
  std::vector<std::size_t> sorted = stats.per_row_gaps;
  std::sort(sorted.begin(), sorted.end());
  stats.doubling_ok = true;
  std::size_t cumulative = 0;
  std::size_t bound = 1;
  for (std::size_t g : sorted) {
    cumulative += g;
    bound *= 2;
    if (cumulative < bound) {
      stats.doubling_ok = false;
      break;
    }
  }
  return stats;
}

}  // namespace diagsynth
