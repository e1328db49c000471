#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diagsynth/diagram.hpp"
#include "diagsynth/io.hpp"
#include "diagsynth/sign_matrix.hpp"
#include "diagsynth/simulate.hpp"
#include "diagsynth/synthesis.hpp"

namespace ds = diagsynth;

namespace {

// Exit-code contract, frozen for scripting:
// 0 ok, 1 I/O, 2 invalid sequence/plan, 3 verification failure.
constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kBadSequence = 2;
constexpr int kVerifyFailed = 3;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') {
      std::cout << '\n';
    }
  } else {
    ds::write_text_file(out_file, text);
  }
}

bool is_builtin_family(const std::string& name) {
  return name == "pbt" || name == "constgap" || name == "nested";
}

// One named sequence at a single level.
ds::GeneralControlSequence family_sequence(const std::string& family, int n) {
  if (family == "pbt") {
    return ds::lift(ds::pbt_sequence(n));
  }
  if (family == "nested") {
    return ds::nested_copy_sequence(n);
  }
  if (family == "constgap") {
    if (n < 3 || n % 2 == 0) {
      throw std::invalid_argument("constgap sequences exist for odd n >= 3");
    }
    return ds::lift(ds::constant_gap_sequence((n - 1) / 2));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

// "<family>:<n>" or a sequence file path.
ds::GeneralControlSequence sequence_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos && is_builtin_family(spec.substr(0, colon))) {
    const int n = std::stoi(spec.substr(colon + 1));
    return family_sequence(spec.substr(0, colon), n);
  }
  return ds::sequence_from_json(ds::read_text_file(spec));
}

int cmd_synth(const std::string& phases_file, const std::string& family,
              bool wrap, bool verify, double flip_phase, double tol,
              const std::string& out_file) {
  const ds::PhaseVector target = ds::pad_phases(ds::phases_from_json(
      ds::read_text_file(phases_file)));

  ds::SequencePlan plan;
  if (is_builtin_family(family)) {
    plan = ds::make_plan(family, target.n);
  } else {
    auto seq = ds::sequence_from_json(ds::read_text_file(family));
    if (seq.n != target.n) {
      std::cerr << "custom sequence is for n=" << seq.n << " but the target needs n="
                << target.n << "\n";
      return kBadSequence;
    }
    plan = ds::custom_plan(std::move(seq));
  }

  ds::Circuit circuit = ds::decompose(target, plan, flip_phase);
  if (wrap) {
    circuit = ds::wrap_circuit_angles(std::move(circuit));
  }

  const ds::GateCounts counts = ds::gate_counts(circuit);
  std::cout << "{\"controls\":" << counts.controls
            << ",\"rotations\":" << counts.rotations
            << ",\"global_phases\":" << counts.global_phases << "}\n";

  if (verify) {
    const ds::MonomialOperator m = ds::evaluate(circuit);
    if (!ds::is_diagonal(m)) {
      std::cerr << "self-verification failed: result is not diagonal\n";
      return kVerifyFailed;
    }
    const double err = ds::max_phase_error(m, target);
    if (err > tol) {
      std::cerr << "self-verification failed: max_error " << format_double(err)
                << " > tol " << format_double(tol) << "\n";
      return kVerifyFailed;
    }
  }

  emit(ds::circuit_to_json(circuit), out_file);
  return kOk;
}

int cmd_verify(const std::string& circuit_file, const std::string& phases_file,
               double tol) {
  const ds::Circuit circuit = ds::circuit_from_json(ds::read_text_file(circuit_file));
  std::vector<double> raw = ds::phases_from_json(ds::read_text_file(phases_file));
  if (raw.size() > (std::size_t{1} << circuit.n)) {
    throw ds::io_error("more phases than the circuit has basis states");
  }
  raw.resize(std::size_t{1} << circuit.n, 0.0);
  const ds::PhaseVector target(circuit.n, std::move(raw));

  const ds::MonomialOperator m = ds::evaluate(circuit);
  const bool diagonal = ds::is_diagonal(m);
  if (!diagonal) {
    std::cout << "{\"diagonal\":false,\"max_error\":null}\n";
    return kVerifyFailed;
  }
  const double err = ds::max_phase_error(m, target);
  std::cout << "{\"diagonal\":true,\"max_error\":" << format_double(err) << "}\n";
  return err <= tol ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis of diagonal unitaries into rotation, controlled-flip and global-phase gates"};
  app.require_subcommand(1);

  unsigned seed = 0;
  app.add_option("--seed", seed,
                 "Seed for randomized self-tests; command outputs never depend on it");

  std::string phases_file, circuit_file, family = "pbt", seq_spec, format = "text";
  std::string out_file;
  bool wrap = false;
  bool verify = true;
  double flip_phase = 0.0;
  double tol = 1e-9;
  int n = 0;

  CLI::App* synth = app.add_subcommand("synth", "Decompose a phase vector into a circuit");
  synth->add_option("phases", phases_file, "Phase JSON file {\"phases\": [...]}")->required();
  synth->add_option("--family", family, "pbt|constgap|nested or a custom sequence file");
  synth->add_flag("--wrap", wrap, "Wrap emitted angles into (-pi, pi]");
  synth->add_flag("--verify,!--no-verify", verify, "Re-evaluate the circuit before writing");
  synth->add_option("--flip-phase", flip_phase, "Phase parameter of the flip involution");
  synth->add_option("--tol", tol, "Self-verification tolerance")->envname("DIAGSYNTH_TOL");
  synth->add_option("--out", out_file, "Circuit JSON output path (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a circuit against target phases");
  verify_cmd->add_option("circuit", circuit_file, "Circuit JSON file")->required();
  verify_cmd->add_option("phases", phases_file, "Phase JSON file")->required();
  verify_cmd->add_option("--tol", tol, "Maximum angular error")->envname("DIAGSYNTH_TOL");

  CLI::App* sequence_cmd = app.add_subcommand("sequence", "Generate a control sequence");
  sequence_cmd->add_option("--family", family, "pbt|constgap|nested")->required();
  sequence_cmd->add_option("--n", n, "Qubit count")->required();
  sequence_cmd->add_option("--out", out_file, "Output path (default stdout)");

  CLI::App* rmatrix_cmd = app.add_subcommand("rmatrix", "Dump the sign matrix as CSV");
  rmatrix_cmd->add_option("--family", family, "pbt|constgap|nested");
  rmatrix_cmd->add_option("--n", n, "Qubit count");
  rmatrix_cmd->add_option("--seq", seq_spec, "Sequence file or family:n");
  rmatrix_cmd->add_option("--out", out_file, "Output path (default stdout)");

  CLI::App* diagram_cmd = app.add_subcommand("diagram", "Render the gap diagram");
  diagram_cmd->add_option("--seq", seq_spec, "Sequence file or family:n")->required();
  diagram_cmd->add_option("--format", format, "text|svg")
      ->check(CLI::IsMember({"text", "svg"}));
  diagram_cmd->add_option("--out", out_file, "Output path (default stdout)");

  CLI::App* count_cmd = app.add_subcommand("count", "Gate counts of a family plan");
  count_cmd->add_option("--family", family, "pbt|constgap|nested");
  count_cmd->add_option("--n", n, "Qubit count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (synth->parsed()) {
      return cmd_synth(phases_file, family, wrap, verify, flip_phase, tol, out_file);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(circuit_file, phases_file, tol);
    }
    if (sequence_cmd->parsed()) {
      emit(ds::sequence_to_json(family_sequence(family, n)), out_file);
      return kOk;
    }
    if (rmatrix_cmd->parsed()) {
      const auto seq = seq_spec.empty() ? family_sequence(family, n)
                                        : sequence_from_spec(seq_spec);
      emit(ds::sign_matrix_csv(ds::build_r(seq)), out_file);
      return kOk;
    }
    if (diagram_cmd->parsed()) {
      const auto seq = sequence_from_spec(seq_spec);
      emit(format == "svg" ? ds::render_svg(seq) : ds::render_text(seq), out_file);
      return kOk;
    }
    if (count_cmd->parsed()) {
      const ds::PhaseVector zeros(n, std::vector<double>(std::size_t{1} << n, 0.0));
      const ds::GateCounts counts =
          ds::gate_counts(ds::decompose(zeros, ds::make_plan(family, n)));
      std::cout << "{\"controls\":" << counts.controls
                << ",\"rotations\":" << counts.rotations
                << ",\"global_phases\":" << counts.global_phases << "}\n";
      return kOk;
    }
  } catch (const ds::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ds::sequence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadSequence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadSequence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
