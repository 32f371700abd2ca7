#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "empty4/tuple.hpp"

namespace empty4 {

/// Sorted, duplicate-free list of empty 4-simplices in canonical form, plus
/// ordered `# key: value` header metadata.
struct Census {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<CanonicalTuple> rows;

  friend bool operator==(const Census&, const Census&) = default;
};

enum class ReadMode {
  Strict,     // rows must already be canonical, in [0, V), sorted, unique
  Normalize,  // any integer residues; canonicalized, sorted and deduplicated
};

/// One `V b0 b1 b2 b3 b4` line per row after the header.
void write_census(const Census& c, std::ostream& out);
std::string format_census(const Census& c);

/// Throws Parse (with the line number) on malformed lines and
/// InvariantViolation on rows that are invalid, not canonical, not empty, or
/// out of order (strict mode).
Census read_census(std::istream& in, ReadMode mode = ReadMode::Strict);
Census read_census_file(const std::string& path, ReadMode mode = ReadMode::Strict);
void write_census_file(const Census& c, const std::string& path);

/// Sorts, deduplicates and checks every row (throws InvariantViolation).
void validate_census(const Census& c);

std::map<i64, std::size_t> histogram_by_volume(const Census& c);

struct WidthStats {
  std::size_t count = 0;
  i64 min_volume = 0;
  i64 max_volume = 0;
  friend bool operator==(const WidthStats&, const WidthStats&) = default;
};
std::map<i64, WidthStats> width_histogram(const Census& c);
/// Lattice width of a realization of the tuple.
i64 tuple_width(const Tuple& t);

struct ExcessRecord {
  i64 volume_excess = 0;   // V - 1
  i64 surface_excess = 0;  // S - 5
  CanonicalTuple tuple;
};
std::vector<ExcessRecord> excess_report(const Census& c);

struct CensusDiff {
  std::vector<CanonicalTuple> only_in_a;
  std::vector<CanonicalTuple> only_in_b;
};
CensusDiff diff_census(const Census& a, const Census& b);

/// Report text. The machine variants print one record per line with
/// space-separated fields and no headings.
std::string format_histogram(const std::map<i64, std::size_t>& h, bool machine);
std::string format_width_histogram(const std::map<i64, WidthStats>& h, bool machine);
std::string format_excess(const std::vector<ExcessRecord>& rows, bool machine);
std::string format_diff(const CensusDiff& d, bool machine);

/// `V b0 b1 b2 b3 b4`.
std::string census_row(const Tuple& t);
/// Stable 64-bit FNV-1a hash, rendered as 16 hex digits.
std::string config_hash(const std::string& text);

}  // namespace empty4
