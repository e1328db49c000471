#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "diagsynth/sequences.hpp"
#include "diagsynth/sign_matrix.hpp"
#include "diagsynth/types.hpp"

namespace diagsynth {

// All parsers throw io_error on malformed input.

/// {"phases": [<float>...]} — any positive length; callers pad as needed.
std::vector<double> phases_from_json(const std::string& text);

/// {"n": <int>, "entries": [[<int>...], ...]}; plain integer entries are
/// accepted and lifted to singleton sets.
GeneralControlSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const GeneralControlSequence& seq);

/// {"n": <int>, "gates": [...], "order": "application"} with gate objects
/// {"kind":"rot","target":t,"angle":a}, {"kind":"cflip","control":c,
/// "target":t,"flip_phase":p}, {"kind":"gphase","angle":a}.
Circuit circuit_from_json(const std::string& text);
std::string circuit_to_json(const Circuit& c);

/// Row-major CSV of +-1 integers.
std::string sign_matrix_csv(const SignMatrix& r);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace diagsynth
