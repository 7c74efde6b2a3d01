#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "autoseq/sequence_spec.hpp"

namespace autoseq {

// {"k": 2, "L": 2, "core": {"kind": "pattern", "pattern": "11"},
//  "transforms": [{"op": "arithsub", "N": 3, "l": 5}, {"op": "polymap", "coeffs": [0, 1]}]}
//
// Integers may also be given as decimal strings when they exceed 64 bits.

/// Throws SpecParseError on malformed JSON or schema violations.
SequenceSpec parse_spec_json(std::string_view text);
SequenceSpec load_spec_file(const std::filesystem::path& path);
std::string to_json(const SequenceSpec& spec);

}  // namespace autoseq
