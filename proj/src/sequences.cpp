#include "diagsynth/sequences.hpp"

#include <algorithm>

namespace diagsynth {

namespace {

std::size_t expected_length(int n) {
  if (n < 1 || n > 31) {
    throw std::invalid_argument("control sequence: qubit count out of range");
  }
  return n == 1 ? 0 : std::size_t{1} << (n - 1);
}

void check_line(int m, int n) {
  if (m < 1 || m > n - 1) {
    throw std::invalid_argument("control sequence: line index out of {1..n-1}");
  }
}

// Mask bit for line m in block-index bit order (line 1 = most significant).
std::uint32_t line_mask(int m, int n) {
  return std::uint32_t{1} << (n - 1 - m);
}

}  // namespace

ControlSequence::ControlSequence(int n_, std::vector<int> entries_)
    : n(n_), entries(std::move(entries_)) {
  if (entries.size() != expected_length(n)) {
    throw std::invalid_argument("control sequence: need 2^(n-1) entries");
  }
  for (int m : entries) {
    check_line(m, n);
  }
}

GeneralControlSequence::GeneralControlSequence(int n_,
                                               std::vector<std::vector<int>> entries_)
    : n(n_), entries(std::move(entries_)) {
  if (entries.size() != expected_length(n)) {
    throw std::invalid_argument("control sequence: need 2^(n-1) entries");
  }
  for (auto& set : entries) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw std::invalid_argument("control sequence: duplicate line in one set");
    }
    for (int m : set) {
      check_line(m, n);
    }
  }
}

ControlSequence pbt_sequence(int n) {
  if (n < 2) {
    throw std::invalid_argument("pbt_sequence: need n >= 2");
  }
  // a_n = (a_{n-1}+1) o {1} o (a_{n-1}+1), a_2 = {1}; appended trailing 1.
  std::vector<int> a{1};
  for (int k = 3; k <= n; ++k) {
    std::vector<int> next;
    next.reserve(2 * a.size() + 1);
    for (int v : a) next.push_back(v + 1);
    next.push_back(1);
    for (int v : a) next.push_back(v + 1);
    a = std::move(next);
  }
  a.push_back(1);
  return ControlSequence(n, std::move(a));
}

ControlSequence constant_gap_sequence(int depth) {
  if (depth < 1) {
    throw std::invalid_argument("constant_gap_sequence: need depth >= 1");
  }
  // Qubit count grows by two per layer: s_{n+2} = (s_n+2) o {2} o ((n+2)-s_n)
  // o {1} o ((n+2)-s_n) o {2} o (s_n+2), starting from s_3 = {2,1,2}.
  std::vector<int> s{2, 1, 2};
  int n = 3;
  for (int d = 2; d <= depth; ++d) {
    std::vector<int> shifted, mirrored;
    shifted.reserve(s.size());
    mirrored.reserve(s.size());
    for (int v : s) shifted.push_back(v + 2);
    for (int v : s) mirrored.push_back(n + 2 - v);
    std::vector<int> next;
    next.reserve(4 * s.size() + 3);
    next.insert(next.end(), shifted.begin(), shifted.end());
    next.push_back(2);
    next.insert(next.end(), mirrored.begin(), mirrored.end());
    next.push_back(1);
    next.insert(next.end(), mirrored.begin(), mirrored.end());
    next.push_back(2);
    next.insert(next.end(), shifted.begin(), shifted.end());
    s = std::move(next);
    n += 2;
  }
  s.push_back(1);
  return ControlSequence(n, std::move(s));
}

GeneralControlSequence nested_copy_sequence(int n) {
  if (n < 2) {
    throw std::invalid_argument("nested_copy_sequence: need n >= 2");
  }
  // A~_n = {{n-1} u a : a in A-bar_{n-1}}, where A-bar interleaves empty sets
  // at odd positions. A~_2 = {{1},{1}}.
  std::vector<std::vector<int>> cur{{1}, {1}};
  for (int k = 3; k <= n; ++k) {
    std::vector<std::vector<int>> next;
    next.reserve(2 * cur.size());
    for (const auto& set : cur) {
      next.push_back({k - 1});
      std::vector<int> merged = set;
      merged.push_back(k - 1);
      next.push_back(std::move(merged));
    }
    cur = std::move(next);
  }
  return GeneralControlSequence(n, std::move(cur));
}

GeneralControlSequence lift(const ControlSequence& seq) {
  std::vector<std::vector<int>> entries;
  entries.reserve(seq.entries.size());
  for (int m : seq.entries) {
    entries.push_back({m});
  }
  return GeneralControlSequence(seq.n, std::move(entries));
}

std::vector<std::uint32_t> prefix_parity_masks(const GeneralControlSequence& seq) {
  std::vector<std::uint32_t> prefix;
  prefix.reserve(seq.length() + 1);
  std::uint32_t acc = 0;
  prefix.push_back(acc);
  for (const auto& set : seq.entries) {
    for (int m : set) {
      acc ^= line_mask(m, seq.n);
    }
    prefix.push_back(acc);
  }
  return prefix;
}

std::vector<std::vector<std::uint8_t>> parity_trace(const GeneralControlSequence& seq) {
  const auto prefix = prefix_parity_masks(seq);
  std::vector<std::vector<std::uint8_t>> s(
      seq.n - 1, std::vector<std::uint8_t>(prefix.size()));
  for (int m = 1; m <= seq.n - 1; ++m) {
    const std::uint32_t mask = line_mask(m, seq.n);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      s[m - 1][i] = (prefix[i] & mask) ? 1 : 0;
    }
  }
  return s;
}

ValidityReport validate(const GeneralControlSequence& seq) {
  const auto prefix = prefix_parity_masks(seq);

  ValidityReport report;
  report.parity_ok = prefix.back() == 0;
  report.gap_count = 0;
  for (const auto& set : seq.entries) {
    report.gap_count += set.size();
  }

  // Distinctness of the 2^(n-1) prefix columns P_0..P_{len-1}.
  const std::size_t dim = seq.n == 1 ? 1 : std::size_t{1} << (seq.n - 1);
  std::vector<bool> seen(dim, false);
  report.coverage_ok = true;
  const std::size_t columns = std::max<std::size_t>(prefix.size() - 1, 1);
  for (std::size_t i = 0; i < columns; ++i) {
    if (seen[prefix[i]]) {
      report.coverage_ok = false;
      break;
    }
    seen[prefix[i]] = true;
  }
  return report;
}

GeneralControlSequence permute_rows(const GeneralControlSequence& seq,
                                    const std::vector<int>& sigma) {
  const int lines = seq.n - 1;
  if (static_cast<int>(sigma.size()) != lines) {
    throw std::invalid_argument("permute_rows: sigma must cover {1..n-1}");
  }
  std::vector<bool> hit(lines, false);
  for (int v : sigma) {
    if (v < 1 || v > lines || hit[v - 1]) {
      throw std::invalid_argument("permute_rows: sigma is not a bijection");
    }
    hit[v - 1] = true;
  }
  std::vector<std::vector<int>> entries = seq.entries;
  for (auto& set : entries) {
    for (int& m : set) {
      m = sigma[m - 1];
    }
  }
  return GeneralControlSequence(seq.n, std::move(entries));
}

}  // namespace diagsynth
