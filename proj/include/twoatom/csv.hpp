#pragma once

#include <iosfwd>
#include <string>

#include "twoatom/sweep.hpp"

namespace twoatom {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// Metadata as leading '#'-prefixed comment lines, then a header row and one
// row per axis point.  Values round-trip exactly; newline is '\n'.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv(const SweepResult& result, const std::string& path);

// Parses a file produced by write_csv (comments, header, numeric rows).
SweepResult read_csv(std::istream& in);
SweepResult read_csv(const std::string& path);

}  // namespace twoatom
