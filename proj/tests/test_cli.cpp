#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("diagsynth-cli-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

RunResult run_cli(const std::string& args, const fs::path& dir,
                  const std::string& env = "") {
  const fs::path out_file = dir / "stdout.txt";
  const fs::path err_file = dir / "stderr.txt";
  const std::string cmd = env + " " + std::string(DIAGSYNTH_CLI_PATH) + " " + args +
                          " >" + out_file.string() + " 2>" + err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

}  // namespace

TEST_CASE("synth produces a verified circuit and prints gate counts") {
  TempDir dir;
  spit(dir.path() / "phases.json", R"({"phases": [0.4, 0.2, -0.6, 0.8]})");
  const auto result =
      run_cli("synth " + (dir.path() / "phases.json").string() + " --family pbt --out " +
                  (dir.path() / "circuit.json").string(),
              dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"controls\":2,\"rotations\":3,\"global_phases\":1}\n");
  CHECK(fs::exists(dir.path() / "circuit.json"));

  const auto verify = run_cli("verify " + (dir.path() / "circuit.json").string() + " " +
                                  (dir.path() / "phases.json").string(),
                              dir.path());
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("\"diagonal\":true") != std::string::npos);
}

TEST_CASE("synth pads inputs whose length is not a power of two") {
  TempDir dir;
  spit(dir.path() / "phases.json",
       R"({"phases": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]})");
  const auto result = run_cli(
      "synth " + (dir.path() / "phases.json").string() + " --out " +
          (dir.path() / "circuit.json").string(),
      dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"controls\":6,\"rotations\":7,\"global_phases\":1}\n");
  CHECK(slurp(dir.path() / "circuit.json").find("\"n\":3") != std::string::npos);
}

TEST_CASE("synth rejects custom sequences that fail coverage") {
  TempDir dir;
  spit(dir.path() / "phases.json",
       R"({"phases": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]})");
  spit(dir.path() / "seq.json", R"({"n": 3, "entries": [1, 1, 2, 2]})");
  const auto result = run_cli("synth " + (dir.path() / "phases.json").string() +
                                  " --family " + (dir.path() / "seq.json").string(),
                              dir.path());
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("degenerate sequence") != std::string::npos);
}

TEST_CASE("synth accepts valid custom sequences") {
  TempDir dir;
  spit(dir.path() / "phases.json",
       R"({"phases": [0.1, -0.2, 0.3, -0.4, 0.5, -0.6, 0.7, -0.8]})");
  spit(dir.path() / "seq.json",
       R"({"n": 3, "entries": [[2], [1, 2], [2], [1, 2]]})");
  const auto result = run_cli("synth " + (dir.path() / "phases.json").string() +
                                  " --family " + (dir.path() / "seq.json").string() +
                                  " --out " + (dir.path() / "c.json").string(),
                              dir.path());
  CHECK(result.exit_code == 0);
  const auto verify = run_cli("verify " + (dir.path() / "c.json").string() + " " +
                                  (dir.path() / "phases.json").string(),
                              dir.path());
  CHECK(verify.exit_code == 0);
}

TEST_CASE("verify flags a circuit with a missing flip as non-diagonal") {
  TempDir dir;
  spit(dir.path() / "phases.json", R"({"phases": [0.4, 0.2, -0.6, 0.8]})");
  run_cli("synth " + (dir.path() / "phases.json").string() + " --out " +
              (dir.path() / "circuit.json").string(),
          dir.path());
  std::string text = slurp(dir.path() / "circuit.json");
  const std::string flip = R"({"control":1,"flip_phase":0.0,"kind":"cflip","target":2},)";
  const auto pos = text.find(flip);
  REQUIRE(pos != std::string::npos);
  text.erase(pos, flip.size());
  spit(dir.path() / "broken.json", text);

  const auto result = run_cli("verify " + (dir.path() / "broken.json").string() + " " +
                                  (dir.path() / "phases.json").string(),
                              dir.path());
  CHECK(result.exit_code == 3);
  CHECK(result.out == "{\"diagonal\":false,\"max_error\":null}\n");
}

TEST_CASE("verify accepts tol zero on the all-zero target") {
  TempDir dir;
  spit(dir.path() / "phases.json", R"({"phases": [0, 0, 0, 0]})");
  run_cli("synth " + (dir.path() / "phases.json").string() + " --out " +
              (dir.path() / "circuit.json").string(),
          dir.path());
  const auto result = run_cli("verify " + (dir.path() / "circuit.json").string() + " " +
                                  (dir.path() / "phases.json").string() + " --tol 0",
                              dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out == "{\"diagonal\":true,\"max_error\":0}\n");
}

TEST_CASE("the DIAGSYNTH_TOL environment variable sets the tolerance") {
  TempDir dir;
  spit(dir.path() / "phases.json", R"({"phases": [0.4, 0.2, -0.6, 0.8]})");
  spit(dir.path() / "wrong.json", R"({"phases": [0.4, 0.2, -0.6, 0.9]})");
  run_cli("synth " + (dir.path() / "phases.json").string() + " --out " +
              (dir.path() / "circuit.json").string(),
          dir.path());
  const std::string verify_args = "verify " + (dir.path() / "circuit.json").string() +
                                  " " + (dir.path() / "wrong.json").string();
  CHECK(run_cli(verify_args, dir.path()).exit_code == 3);
  CHECK(run_cli(verify_args, dir.path(), "DIAGSYNTH_TOL=1.0").exit_code == 0);
}

TEST_CASE("synth then verify round-trips for every family") {
  TempDir dir;
  spit(dir.path() / "phases.json",
       R"({"phases": [0.1, -0.2, 0.3, -0.4, 0.5, -0.6, 0.7, -0.8,
                      1.1, -1.2, 1.3, -1.4, 1.5, -1.6, 1.7, -1.8,
                      2.1, -2.2, 2.3, -2.4, 2.5, -2.6, 2.7, -2.8,
                      3.1, -3.2, 3.3, -3.4, 3.5, -3.6, 3.7, -3.8]})");
  for (const std::string family : {"pbt", "constgap", "nested"}) {
    const auto synth = run_cli("synth " + (dir.path() / "phases.json").string() +
                                   " --family " + family + " --out " +
                                   (dir.path() / (family + ".json")).string(),
                               dir.path());
    REQUIRE(synth.exit_code == 0);
    const auto verify =
        run_cli("verify " + (dir.path() / (family + ".json")).string() + " " +
                    (dir.path() / "phases.json").string(),
                dir.path());
    REQUIRE(verify.exit_code == 0);
  }
}

TEST_CASE("malformed input exits with the I/O code") {
  TempDir dir;
  spit(dir.path() / "phases.json", "{ not json");
  const auto result =
      run_cli("synth " + (dir.path() / "phases.json").string(), dir.path());
  CHECK(result.exit_code == 1);

  const auto missing = run_cli("verify missing.json also-missing.json", dir.path());
  CHECK(missing.exit_code == 1);
}

TEST_CASE("rmatrix prints the printed 4x4 matrix") {
  TempDir dir;
  const auto result = run_cli("rmatrix --family pbt --n 3", dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out == "1,1,1,1\n1,-1,-1,1\n1,1,-1,-1\n1,-1,1,-1\n");
}

TEST_CASE("sequence emits the nested listing") {
  TempDir dir;
  const auto result = run_cli("sequence --family nested --n 4", dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"entries\":[[3],[2,3],[3],[1,2,3],[3],[2,3],[3],[1,2,3]],\"n\":4}\n");
}

TEST_CASE("count reports the closed-form gate tallies") {
  TempDir dir;
  const auto result = run_cli("count --family pbt --n 8", dir.path());
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"controls\":254,\"rotations\":255,\"global_phases\":1}\n");
}

TEST_CASE("diagram renders to text and svg") {
  TempDir dir;
  const auto text = run_cli("diagram --seq pbt:3 --format text", dir.path());
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("m=1") != std::string::npos);

  const auto svg = run_cli("diagram --seq pbt:3 --format svg --out " +
                               (dir.path() / "d.svg").string(),
                           dir.path());
  CHECK(svg.exit_code == 0);
  CHECK(slurp(dir.path() / "d.svg").rfind("<?xml", 0) == 0);

  spit(dir.path() / "seq.json", R"({"n": 3, "entries": [2, 1, 2, 1]})");
  const auto from_file = run_cli(
      "diagram --seq " + (dir.path() / "seq.json").string() + " --format text",
      dir.path());
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == text.out);
}
