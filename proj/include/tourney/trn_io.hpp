#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tourney/tournament.hpp"

namespace tourney {

// .trn text format: first line is n, followed by n lines of n '0'/'1'
// characters where row u, column v is bit(u, v).
Tournament read_trn(std::istream& in);
void write_trn(std::ostream& out, const Tournament& t);
std::string to_trn_string(const Tournament& t);

// Arc-list format: one "u v" line per arc (u -> v). Lines starting with '#'
// are comments, except "# n <count>" which fixes the order; without it the
// order is one more than the largest vertex mentioned.
Tournament read_arc_list(std::istream& in);
void write_arc_list(std::ostream& out, const Tournament& t);

// File wrappers. Unreadable or unwritable paths raise ParseError.
Tournament load_trn(const std::filesystem::path& path);
void save_trn(const std::filesystem::path& path, const Tournament& t);
Tournament load_arc_list(const std::filesystem::path& path);
void save_arc_list(const std::filesystem::path& path, const Tournament& t);

}  // namespace tourney
