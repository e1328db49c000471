#include "diagsynth/synthesis.hpp"

#include <cinttypes>
#include <cstdio>

#include "diagsynth/sign_matrix.hpp"

namespace diagsynth {

LevelSplit split_level(std::span<const double> alpha) {
  if (alpha.empty() || alpha.size() % 2 != 0) {
    throw std::invalid_argument("split_level: need an even number of phases");
  }
  LevelSplit out;
  out.alpha_bar.reserve(alpha.size() / 2);
  out.gamma.reserve(alpha.size() / 2);
  for (std::size_t i = 0; i + 1 < alpha.size(); i += 2) {
    out.alpha_bar.push_back((alpha[i] + alpha[i + 1]) / 2.0);
    out.gamma.push_back((alpha[i] - alpha[i + 1]) / 2.0);
  }
  return out;
}

const GeneralControlSequence& SequencePlan::level(int k) const {
  if (k < 2 || k > qubit_count()) {
    throw std::invalid_argument("SequencePlan: no sequence for that level");
  }
  return levels[k - 2];
}

SequencePlan make_plan(const std::string& family, int n) {
  if (n < 1) {
    throw std::invalid_argument("make_plan: qubit count must be positive");
  }
  SequencePlan plan;
  plan.family = family;
  for (int k = 2; k <= n; ++k) {
    if (family == "pbt") {
      plan.levels.push_back(lift(pbt_sequence(k)));
    } else if (family == "nested") {
      plan.levels.push_back(nested_copy_sequence(k));
    } else if (family == "constgap") {
      // Defined for odd levels >= 3 only; pbt fills the rest.
      if (k >= 3 && k % 2 == 1) {
        plan.levels.push_back(lift(constant_gap_sequence((k - 1) / 2)));
      } else {
        plan.levels.push_back(lift(pbt_sequence(k)));
      }
    } else {
      throw std::invalid_argument("make_plan: unknown family '" + family + "'");
    }
  }
  return plan;
}

SequencePlan custom_plan(GeneralControlSequence top) {
  SequencePlan plan;
  plan.family = "custom";
  for (int k = 2; k < top.n; ++k) {
    plan.levels.push_back(lift(pbt_sequence(k)));
  }
  if (top.n >= 2) {
    plan.levels.push_back(std::move(top));
  }
  return plan;
}

std::vector<Gate> build_tail(std::span<const double> beta,
                             std::span<const std::vector<int>> entries,
                             int target, double flip_phase) {
  if (beta.size() != entries.size()) {
    throw std::invalid_argument("build_tail: beta and sequence lengths differ");
  }
  std::vector<Gate> gates;
  // Application order reverses the matrix product: position i of the product
  // is applied (2^(n-1) - i)-th, flips before the rotation within a position.
  for (std::size_t i = entries.size(); i-- > 0;) {
    for (int m : entries[i]) {
      if (m < 1 || m >= target) {
        throw std::invalid_argument("build_tail: control line out of range");
      }
      gates.push_back(ControlFlip{m, target, flip_phase});
    }
    gates.push_back(Rotation{target, beta[i]});
  }
  return gates;
}

std::vector<Gate> build_tail(std::span<const double> beta,
                             const GeneralControlSequence& seq,
                             double flip_phase) {
  return build_tail(beta, seq.entries, seq.n, flip_phase);
}

Circuit decompose(const PhaseVector& target, const SequencePlan& plan,
                  double flip_phase) {
  if (plan.qubit_count() != target.n) {
    throw std::invalid_argument("decompose: plan does not cover the target size");
  }

  // Peel levels top-down, collecting each level's tail; emit base first.
  std::vector<std::vector<Gate>> tails;
  std::vector<double> alpha = target.phases;
  for (int k = target.n; k >= 2; --k) {
    LevelSplit split = split_level(alpha);
    std::vector<double> beta = invert_r(plan.level(k), split.gamma);
    tails.push_back(build_tail(beta, plan.level(k), flip_phase));
    alpha = std::move(split.alpha_bar);
  }

  Circuit circuit;
  circuit.n = target.n;
  circuit.gates.push_back(GlobalPhase{(alpha[0] + alpha[1]) / 2.0});
  circuit.gates.push_back(Rotation{1, (alpha[0] - alpha[1]) / 2.0});
  for (auto it = tails.rbegin(); it != tails.rend(); ++it) {
    circuit.gates.insert(circuit.gates.end(), it->begin(), it->end());
  }
  return circuit;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    if (std::holds_alternative<ControlFlip>(g)) {
      ++counts.controls;
    } else if (std::holds_alternative<Rotation>(g)) {
      ++counts.rotations;
    } else {
      ++counts.global_phases;
    }
  }
  return counts;
}

Circuit wrap_circuit_angles(Circuit c) {
  for (Gate& g : c.gates) {
    if (auto* rot = std::get_if<Rotation>(&g)) {
      rot->angle = wrap_angle(rot->angle);
    } else if (auto* cf = std::get_if<ControlFlip>(&g)) {
      cf->flip_phase = wrap_angle(cf->flip_phase);
    } else {
      std::get<GlobalPhase>(g).angle = wrap_angle(std::get<GlobalPhase>(g).angle);
    }
  }
  return c;
}

namespace {

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  validate_circuit(c);
  std::string out;
  out += "OPENQASM 3.0;\n";
  out += "include \"stdgates.inc\";\n";
  out += "qubit[" + std::to_string(c.n) + "] q;\n";
  for (const Gate& g : c.gates) {
    if (const auto* rot = std::get_if<Rotation>(&g)) {
      // rz(t) = diag(e^{-it/2}, e^{it/2}), so diag(e^{ia}, e^{-ia}) = rz(-2a).
      out += "rz(" + format_angle(-2.0 * rot->angle) + ") q[" +
             std::to_string(rot->target - 1) + "];\n";
    } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
      if (cf->flip_phase != 0.0) {
        throw std::invalid_argument("no standard gate; export unsupported");
      }
      out += "cx q[" + std::to_string(cf->control - 1) + "], q[" +
             std::to_string(cf->target - 1) + "];\n";
    } else {
      out += "gphase(" + format_angle(std::get<GlobalPhase>(g).angle) + ");\n";
    }
  }
  return out;
}

}  // namespace diagsynth
