#pragma once

#include <string>

#include "seqcorr/sequence.hpp"

// Sequence files: an optional comment header `# period=N kind=<spec>`, then
// the period as an ASCII '0'/'1' string, index 0 leftmost (matching the 2^i
// expansion order), newline-terminated.

namespace seqcorr {

/// Writes the header (with the given kind token) and the bits.
void write_sequence_file(const std::string& path, const BinarySequence& s,
                         const std::string& kind);

/// Reads a sequence file. Header lines are optional; when a `period=` field
/// is present it must match the bit count. Throws std::invalid_argument on
/// unreadable or ill-formed input.
BinarySequence read_sequence_file(const std::string& path);

}  // namespace seqcorr
