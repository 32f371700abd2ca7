#include "empty4/tuple.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>

#include "empty4/error.hpp"

namespace empty4 {

namespace {

void check_entry_count(std::size_t n) {
  if (n < 2 || n > static_cast<std::size_t>(kMaxDim) + 1)
    raise(ErrorCode::InvalidArgument,
          "tuple needs between 2 and " + std::to_string(kMaxDim + 1) + " entries, got " + std::to_string(n));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

i64 parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorCode::Parse, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

}  // namespace

Tuple unchecked_tuple(i64 volume, std::vector<i64> residues) { return Tuple(volume, std::move(residues)); }

Tuple Tuple::make(i64 volume, std::span<const i64> raw) {
  if (volume < 1) raise(ErrorCode::InvalidArgument, "volume must be positive, got " + std::to_string(volume));
  check_entry_count(raw.size());
  std::vector<i64> b(raw.size());
  i64 sum = 0, g = volume;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    b[i] = mod(raw[i], volume);
    sum = (sum + b[i]) % volume;
    g = std::gcd(g, b[i]);
  }
  if (sum != 0) raise(ErrorCode::SumNotZero, "entries sum to " + std::to_string(sum) + " mod " + std::to_string(volume));
  if (g != 1)
    raise(ErrorCode::NotGenerator, "gcd of entries and volume is " + std::to_string(g));
  return Tuple(volume, std::move(b));
}

Tuple Tuple::unimodular(int dim) {
  check_entry_count(static_cast<std::size_t>(dim) + 1);
  return Tuple(1, std::vector<i64>(static_cast<std::size_t>(dim) + 1, 0));
}

std::strong_ordering operator<=>(const Tuple& a, const Tuple& b) {
  if (auto c = a.volume_ <=> b.volume_; c != 0) return c;
  if (auto c = a.residues_.size() <=> b.residues_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.residues_.begin(), a.residues_.end(), b.residues_.begin(),
                                                b.residues_.end());
}

Tuple parse_tuple(std::string_view text, int expected_dim) {
  std::string_view s = trim(text);
  auto colon = s.find(':');
  if (colon == std::string_view::npos) raise(ErrorCode::Parse, "expected 'V:b0,b1,...', got '" + std::string(s) + "'");
  i64 volume = parse_int(s.substr(0, colon), text);
  std::vector<i64> raw;
  std::string_view rest = s.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    raw.push_back(parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (expected_dim >= 0 && raw.size() != static_cast<std::size_t>(expected_dim) + 1)
    raise(ErrorCode::Parse, "expected " + std::to_string(expected_dim + 1) + " entries in '" + std::string(s) + "'");
  return Tuple::make(volume, raw);
}

std::string to_string(const Tuple& t) {
  std::string out = std::to_string(t.volume()) + ":";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out;
}

Tuple unit_multiply(const Tuple& t, i64 u) {
  const i64 v = t.volume();
  if (std::gcd(mod(u, v), v) != 1)
    raise(ErrorCode::NotAUnit, std::to_string(u) + " is not a unit mod " + std::to_string(v));
  std::vector<i64> b(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) b[i] = mod(mod(u, v) * t[i], v);
  return unchecked_tuple(v, std::move(b));
}

Tuple permute(const Tuple& t, std::span<const int> sigma) {
  if (sigma.size() != t.size()) raise(ErrorCode::InvalidArgument, "permutation length mismatch");
  std::vector<bool> seen(t.size(), false);
  std::vector<i64> b(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    int s = sigma[i];
    if (s < 0 || static_cast<std::size_t>(s) >= t.size() || seen[s])
      raise(ErrorCode::InvalidArgument, "not a permutation");
    seen[s] = true;
    b[i] = t[s];
  }
  return unchecked_tuple(t.volume(), std::move(b));
}

void canonical_residues(i64 volume, std::span<const i64> b, std::span<i64> out) {
  const std::size_t n = b.size();
  std::array<i64, kMaxDim + 1> best{}, cur{};
  bool have = false;

  auto consider = [&](i64 u) {
    for (std::size_t i = 0; i < n; ++i) cur[i] = (u * b[i]) % volume;
    std::sort(cur.begin(), cur.begin() + n);
    if (!have || std::lexicographical_compare(cur.begin(), cur.begin() + n, best.begin(), best.begin() + n)) {
      best = cur;
      have = true;
    }
  };

  // The number of zero entries is invariant, and when some entry is a unit the
  // smallest nonzero entry of the optimum is 1. Only u = (unit entry)^-1 can
  // produce it, so those are the only multipliers worth trying.
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(b[i], volume) == 1) {
      consider(*inverse_mod(b[i], volume));
    }
  }
  if (!have) {
    for (i64 u : units_mod(volume)) consider(u);
  }
  std::copy(best.begin(), best.begin() + n, out.begin());
}

CanonicalTuple canonical_form(const Tuple& t) {
  std::vector<i64> out(t.size());
  canonical_residues(t.volume(), t.residues(), out);
  return CanonicalTuple(unchecked_tuple(t.volume(), std::move(out)));
}

CanonicalTuple canonical_from_sorted(i64 volume, std::span<const i64> residues) {
  return CanonicalTuple(unchecked_tuple(volume, std::vector<i64>(residues.begin(), residues.end())));
}

CanonicalTuple CanonicalTuple::adopt(const Tuple& t) {
  CanonicalTuple c = canonical_form(t);
  if (c.tuple() != t) raise(ErrorCode::InvariantViolation, to_string(t) + " is not in canonical form");
  return c;
}

bool is_isomorphic(const Tuple& a, const Tuple& b) {
  if (a.volume() != b.volume() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

SymmetryGroup symmetry_group(const Tuple& t) {
  const std::size_t n = t.size();
  const i64 v = t.volume();
  std::vector<i64> sorted_b(t.residues().begin(), t.residues().end());
  std::sort(sorted_b.begin(), sorted_b.end());

  std::set<Permutation> found;
  std::vector<i64> image(n);
  Permutation sigma(n);
  std::vector<bool> used(n);

  // Assign sigma[i] to any unused j with b[j] == image[i].
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      found.insert(sigma);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && t[j] == image[i]) {
        used[j] = true;
        sigma[i] = static_cast<int>(j);
        self(self, i + 1);
        used[j] = false;
      }
    }
  };

  for (i64 u : units_mod(v)) {
    for (std::size_t i = 0; i < n; ++i) image[i] = (u * t[i]) % v;
    std::vector<i64> sorted_img = image;
    std::sort(sorted_img.begin(), sorted_img.end());
    if (sorted_img != sorted_b) continue;
    std::fill(used.begin(), used.end(), false);
    extend(extend, 0);
  }

  SymmetryGroup g;
  g.elements.assign(found.begin(), found.end());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : g.elements)
    for (std::size_t i = 0; i < n; ++i) {
      int a = find(static_cast<int>(i)), b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  g.orbit_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.orbit_of[i] = find(static_cast<int>(i));
    if (g.orbit_of[i] == static_cast<int>(i)) ++g.orbit_count;
  }
  return g;
}

}  // namespace empty4
