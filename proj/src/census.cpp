#include "empty4/census.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "empty4/error.hpp"
#include "empty4/geometry.hpp"
#include "empty4/lattice.hpp"

namespace empty4 {

std::string census_row(const Tuple& t) {
  std::string s = std::to_string(t.volume());
  for (i64 x : t.residues()) s += ' ' + std::to_string(x);
  return s;
}

std::string config_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_census(const Census& c, std::ostream& out) {
  for (const auto& [k, v] : c.metadata) out << "# " << k << ": " << v << '\n';
  for (const auto& r : c.rows) out << census_row(r) << '\n';
}

std::string format_census(const Census& c) {
  std::ostringstream os;
  write_census(c, os);
  return os.str();
}

void write_census_file(const Census& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::Io, "cannot open " + path + " for writing");
  write_census(c, out);
  if (!out) raise(ErrorCode::Io, "write to " + path + " failed");
}

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && issp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(s[i])) ++i;
  return s.substr(i);
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

}  // namespace

Census read_census(std::istream& in, ReadMode mode) {
  Census c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon != std::string::npos)
        c.metadata.emplace_back(trim(line.substr(1, colon - 1)), trim(line.substr(colon + 1)));
      continue;
    }
    std::vector<i64> nums;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      i64 x = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || p != tok.data() + tok.size())
        raise(ErrorCode::Parse, at_line(line_no) + "bad integer '" + tok + "'");
      nums.push_back(x);
    }
    if (nums.size() != 6)
      raise(ErrorCode::Parse, at_line(line_no) + "expected 6 fields (V b0 b1 b2 b3 b4), got " + std::to_string(nums.size()));
    const i64 v = nums[0];
    if (v < 1) raise(ErrorCode::Parse, at_line(line_no) + "volume must be positive");
    std::vector<i64> b(nums.begin() + 1, nums.end());
    if (mode == ReadMode::Strict)
      for (i64 x : b)
        if (x < 0 || x >= v) raise(ErrorCode::InvariantViolation, at_line(line_no) + "residue out of [0, V)");
    try {
      Tuple t = Tuple::make(v, b);
      if (mode == ReadMode::Strict) {
        auto ct = CanonicalTuple::adopt(t);
        if (!c.rows.empty() && !(c.rows.back() < ct))
          raise(ErrorCode::InvariantViolation, "rows not strictly increasing");
        if (!is_empty(t)) raise(ErrorCode::InvariantViolation, "tuple is not empty");
        c.rows.push_back(std::move(ct));
      } else {
        if (!is_empty(t)) raise(ErrorCode::InvariantViolation, "tuple is not empty");
        c.rows.push_back(canonical_form(t));
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      raise(ErrorCode::InvariantViolation, at_line(line_no) + e.what());
    }
  }
  if (mode == ReadMode::Normalize) {
    std::sort(c.rows.begin(), c.rows.end());
    c.rows.erase(std::unique(c.rows.begin(), c.rows.end()), c.rows.end());
  }
  return c;
}

Census read_census_file(const std::string& path, ReadMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::Io, "cannot open " + path);
  return read_census(in, mode);
}

void validate_census(const Census& c) {
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    const auto& r = c.rows[i];
    if (i && !(c.rows[i - 1] < r)) raise(ErrorCode::InvariantViolation, "row " + std::to_string(i + 1) + " out of order");
    if (canonical_form(r.tuple()) != r) raise(ErrorCode::InvariantViolation, census_row(r) + " is not canonical");
    if (!is_empty(r)) raise(ErrorCode::InvariantViolation, census_row(r) + " is not empty");
  }
}

std::map<i64, std::size_t> histogram_by_volume(const Census& c) {
  std::map<i64, std::size_t> h;
  for (const auto& r : c.rows) ++h[r.volume()];
  return h;
}

i64 tuple_width(const Tuple& t) {
  try {
    return width(realize(t));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoUnitEntry) throw;
    return width(realize_general(t));
  }
}

std::map<i64, WidthStats> width_histogram(const Census& c) {
  std::map<i64, WidthStats> h;
  for (const auto& r : c.rows) {
    auto& s = h[tuple_width(r)];
    if (s.count == 0) s.min_volume = s.max_volume = r.volume();
    ++s.count;
    s.min_volume = std::min(s.min_volume, r.volume());
    s.max_volume = std::max(s.max_volume, r.volume());
  }
  return h;
}

std::vector<ExcessRecord> excess_report(const Census& c) {
  std::vector<ExcessRecord> out;
  out.reserve(c.rows.size());
  for (const auto& r : c.rows) {
    const auto fv = facet_volumes(r);
    const i64 s = std::accumulate(fv.begin(), fv.end(), i64{0});
    out.push_back({r.volume() - 1, s - static_cast<i64>(fv.size()), r});
  }
  return out;
}

CensusDiff diff_census(const Census& a, const Census& b) {
  auto canon = [](const Census& c) {
    std::vector<CanonicalTuple> v;
    for (const auto& r : c.rows) v.push_back(canonical_form(r.tuple()));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto ca = canon(a), cb = canon(b);
  CensusDiff d;
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(d.only_in_a));
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(d.only_in_b));
  return d;
}

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }
std::string pad(i64 x, std::size_t w) { return pad(std::to_string(x), w); }

}  // namespace

std::string format_histogram(const std::map<i64, std::size_t>& h, bool machine) {
  std::string out;
  std::size_t total = 0;
  if (!machine) out += "     V  count\n";
  for (const auto& [v, n] : h) {
    total += n;
    out += machine ? std::to_string(v) + ' ' + std::to_string(n) + '\n'
                   : pad(v, 6) + pad(static_cast<i64>(n), 7) + '\n';
  }
  if (!machine) {
    out += "total " + std::to_string(total);
    if (!h.empty())
      out += " in " + std::to_string(h.size()) + " volumes from " + std::to_string(h.begin()->first) + " to " +
             std::to_string(h.rbegin()->first);
    out += '\n';
  }
  return out;
}

std::string format_width_histogram(const std::map<i64, WidthStats>& h, bool machine) {
  std::string out;
  if (!machine) out += "width   count   min V   max V\n";
  for (const auto& [w, s] : h) {
    if (machine)
      out += std::to_string(w) + ' ' + std::to_string(s.count) + ' ' + std::to_string(s.min_volume) + ' ' +
             std::to_string(s.max_volume) + '\n';
    else
      out += pad(w, 5) + pad(static_cast<i64>(s.count), 8) + pad(s.min_volume, 8) + pad(s.max_volume, 8) + '\n';
  }
  return out;
}

std::string format_excess(const std::vector<ExcessRecord>& rows, bool machine) {
  std::string out;
  if (!machine) out += "  V-1  S-5  tuple\n";
  for (const auto& r : rows) {
    if (machine)
      out += std::to_string(r.volume_excess) + ' ' + std::to_string(r.surface_excess) + ' ' + census_row(r.tuple) + '\n';
    else
      out += pad(r.volume_excess, 5) + pad(r.surface_excess, 5) + "  " + to_string(r.tuple.tuple()) + '\n';
  }
  return out;
}

std::string format_diff(const CensusDiff& d, bool machine) {
  std::string out;
  if (!machine) out += "only in first: " + std::to_string(d.only_in_a.size()) + '\n';
  for (const auto& r : d.only_in_a) out += (machine ? "< " : "  ") + census_row(r) + '\n';
  if (!machine) out += "only in second: " + std::to_string(d.only_in_b.size()) + '\n';
  for (const auto& r : d.only_in_b) out += (machine ? "> " : "  ") + census_row(r) + '\n';
  return out;
}

}  // namespace empty4
