#include "diagsynth/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace diagsynth {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw io_error("malformed JSON");
  }
  return j;
}

double as_finite_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw io_error(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

std::vector<double> phases_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("phases") || !j["phases"].is_array()) {
    throw io_error("phase file needs a \"phases\" array");
  }
  std::vector<double> phases;
  phases.reserve(j["phases"].size());
  for (const auto& v : j["phases"]) {
    phases.push_back(as_finite_number(v, "phase"));
  }
  return phases;
}

GeneralControlSequence sequence_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("entries") || !j["entries"].is_array()) {
    throw io_error("sequence file needs \"n\" and an \"entries\" array");
  }
  std::vector<std::vector<int>> entries;
  entries.reserve(j["entries"].size());
  for (const auto& e : j["entries"]) {
    if (e.is_number_integer()) {
      entries.push_back({e.get<int>()});
    } else if (e.is_array()) {
      std::vector<int> set;
      for (const auto& v : e) {
        if (!v.is_number_integer()) {
          throw io_error("sequence entries must be integers");
        }
        set.push_back(v.get<int>());
      }
      entries.push_back(std::move(set));
    } else {
      throw io_error("sequence entries must be integers or integer arrays");
    }
  }
  try {
    return GeneralControlSequence(j["n"].get<int>(), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw io_error(e.what());
  }
}

std::string sequence_to_json(const GeneralControlSequence& seq) {
  json j;
  j["n"] = seq.n;
  j["entries"] = json::array();
  for (const auto& set : seq.entries) {
    j["entries"].push_back(set);
  }
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("gates") || !j["gates"].is_array()) {
    throw io_error("circuit file needs \"n\" and a \"gates\" array");
  }
  if (j.value("order", "application") != "application") {
    throw io_error("circuit file must use application gate order");
  }
  Circuit c;
  c.n = j["n"].get<int>();
  for (const auto& g : j["gates"]) {
    if (!g.is_object() || !g.contains("kind")) {
      throw io_error("gate entries need a \"kind\"");
    }
    const std::string kind = g["kind"].get<std::string>();
    if (kind == "rot") {
      c.gates.push_back(Rotation{g.at("target").get<int>(),
                                 as_finite_number(g.at("angle"), "angle")});
    } else if (kind == "cflip") {
      ControlFlip cf;
      cf.control = g.at("control").get<int>();
      cf.target = g.at("target").get<int>();
      cf.flip_phase =
          g.contains("flip_phase") ? as_finite_number(g["flip_phase"], "flip_phase") : 0.0;
      c.gates.push_back(cf);
    } else if (kind == "gphase") {
      c.gates.push_back(GlobalPhase{as_finite_number(g.at("angle"), "angle")});
    } else {
      throw io_error("unknown gate kind '" + kind + "'");
    }
  }
  try {
    validate_circuit(c);
  } catch (const std::invalid_argument& e) {
    throw io_error(e.what());
  }
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  json j;
  j["n"] = c.n;
  j["order"] = "application";
  j["gates"] = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    if (const auto* rot = std::get_if<Rotation>(&g)) {
      jg = {{"kind", "rot"}, {"target", rot->target}, {"angle", rot->angle}};
    } else if (const auto* cf = std::get_if<ControlFlip>(&g)) {
      jg = {{"kind", "cflip"},
            {"control", cf->control},
            {"target", cf->target},
            {"flip_phase", cf->flip_phase}};
    } else {
      jg = {{"kind", "gphase"}, {"angle", std::get<GlobalPhase>(g).angle}};
    }
    j["gates"].push_back(std::move(jg));
  }
  return j.dump();
}

std::string sign_matrix_csv(const SignMatrix& r) {
  std::string out;
  for (std::size_t row = 0; row < r.dim(); ++row) {
    for (std::size_t col = 0; col < r.dim(); ++col) {
      if (col) {
        out += ',';
      }
      out += r.entry(row, col) == 1 ? "1" : "-1";
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw io_error("cannot write " + path.string());
  }
  out << text;
}

}  // namespace diagsynth
