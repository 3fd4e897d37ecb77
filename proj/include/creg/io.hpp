#pragma once

#include "creg/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace creg {

/// Reads `px py pz qx qy qz` per line, whitespace-separated decimals.
/// Lines whose first non-blank character is '#' are skipped. Ids follow file
/// order. Throws ParseError (with line number) on malformed records and
/// EmptyFile for fewer than 3 records. delta is left at 0 for the caller.
CorrespondenceSet parse_correspondences(const std::filesystem::path& path);
CorrespondenceSet parse_correspondences(std::istream& in);

/// Writes the set in the same format with 17 significant digits, which
/// round-trips doubles exactly.
void write_correspondences(const std::filesystem::path& path,
                           const CorrespondenceSet& set);
void write_correspondences(std::ostream& os, const CorrespondenceSet& set);

}  // namespace creg
