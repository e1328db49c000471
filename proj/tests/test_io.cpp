#include <doctest.h>

#include "diagsynth/io.hpp"
#include "diagsynth/synthesis.hpp"

using namespace diagsynth;

TEST_CASE("phase files") {
  CHECK(phases_from_json(R"({"phases": [0.25, -1.5, 3.0]})") ==
        std::vector<double>{0.25, -1.5, 3.0});
  CHECK_THROWS_AS(phases_from_json("{"), io_error);
  CHECK_THROWS_AS(phases_from_json(R"({"phases": "nope"})"), io_error);
  CHECK_THROWS_AS(phases_from_json(R"({"phases": [1, "x"]})"), io_error);
}

TEST_CASE("sequence files accept plain integers and lift them") {
  const auto seq = sequence_from_json(R"({"n": 3, "entries": [2, 1, 2, 1]})");
  CHECK(seq.n == 3);
  CHECK(seq.entries == std::vector<std::vector<int>>{{2}, {1}, {2}, {1}});

  const auto general =
      sequence_from_json(R"({"n": 3, "entries": [[2], [1, 2], [2], [1, 2]]})");
  CHECK(general.entries == nested_copy_sequence(3).entries);

  CHECK_THROWS_AS(sequence_from_json(R"({"n": 3, "entries": [2, 1]})"), io_error);
  CHECK_THROWS_AS(sequence_from_json(R"({"entries": [1, 1]})"), io_error);
  CHECK_THROWS_AS(sequence_from_json(R"({"n": 2, "entries": [1.5, 1]})"), io_error);
}

TEST_CASE("sequence serialization round trip") {
  for (const auto& seq : {lift(pbt_sequence(4)), nested_copy_sequence(4)}) {
    const auto back = sequence_from_json(sequence_to_json(seq));
    CHECK(back.n == seq.n);
    CHECK(back.entries == seq.entries);
  }
}

TEST_CASE("circuit serialization round trip keeps angles bit-exact") {
  const PhaseVector target = pad_phases({0.4, 0.2, -0.6, 0.8, 1e-17, 0.1234567890123456789});
  const Circuit c = decompose(target, make_plan("nested", target.n), 0.25);
  const Circuit back = circuit_from_json(circuit_to_json(c));
  REQUIRE(back.n == c.n);
  REQUIRE(back.gates.size() == c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (const auto* rot = std::get_if<Rotation>(&c.gates[i])) {
      CHECK(std::get<Rotation>(back.gates[i]).target == rot->target);
      CHECK(std::get<Rotation>(back.gates[i]).angle == rot->angle);
    } else if (const auto* cf = std::get_if<ControlFlip>(&c.gates[i])) {
      CHECK(std::get<ControlFlip>(back.gates[i]).control == cf->control);
      CHECK(std::get<ControlFlip>(back.gates[i]).flip_phase == cf->flip_phase);
    } else {
      CHECK(std::get<GlobalPhase>(back.gates[i]).angle ==
            std::get<GlobalPhase>(c.gates[i]).angle);
    }
  }
}

TEST_CASE("circuit files are validated") {
  CHECK_THROWS_AS(circuit_from_json(R"({"n": 2})"), io_error);
  CHECK_THROWS_AS(
      circuit_from_json(R"({"n": 2, "order": "matrix", "gates": []})"), io_error);
  CHECK_THROWS_AS(
      circuit_from_json(
          R"({"n": 2, "gates": [{"kind": "spin", "target": 1, "angle": 0.1}]})"),
      io_error);
  CHECK_THROWS_AS(
      circuit_from_json(
          R"({"n": 2, "gates": [{"kind": "cflip", "control": 2, "target": 1}]})"),
      io_error);
  const Circuit ok = circuit_from_json(
      R"({"n": 2, "gates": [{"kind": "cflip", "control": 1, "target": 2}]})");
  CHECK(std::get<ControlFlip>(ok.gates[0]).flip_phase == 0.0);
}

TEST_CASE("sign matrix CSV") {
  CHECK(sign_matrix_csv(build_r(lift(pbt_sequence(2)))) == "1,1\n1,-1\n");
  const std::string csv = sign_matrix_csv(build_r(lift(pbt_sequence(3))));
  CHECK(csv == "1,1,1,1\n1,-1,-1,1\n1,1,-1,-1\n1,-1,1,-1\n");
}
