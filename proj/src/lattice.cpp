#include "empty4/lattice.hpp"

#include <array>
#include <numeric>

#include "empty4/error.hpp"

namespace empty4 {

namespace {

// Sum of (j * b_i mod V) over i, and whether any term vanishes.
struct ClassSum {
  i64 total = 0;
  bool has_zero = false;
};

ClassSum class_sum(std::span<const i64> b, i64 v, i64 j) {
  ClassSum s;
  for (i64 x : b) {
    i64 r = (j * x) % v;
    s.total += r;
    s.has_zero |= (r == 0);
  }
  return s;
}

// Four nonzero residues mod m pair up as two opposite pairs.
bool pairs_up(const std::array<i64, 4>& x, i64 m) {
  auto opp = [m](i64 a, i64 b) { return (a + b) % m == 0; };
  return (opp(x[0], x[1]) && opp(x[2], x[3])) || (opp(x[0], x[2]) && opp(x[1], x[3])) ||
         (opp(x[0], x[3]) && opp(x[1], x[2]));
}

}  // namespace

CosetProfile coset_profile(const Tuple& t, i64 j) {
  const i64 v = t.volume();
  if (j < 1 || j >= v)
    raise(ErrorCode::InvalidArgument, "coset index " + std::to_string(j) + " outside [1, " + std::to_string(v) + ")");
  CosetProfile p;
  p.j = j;
  i64 total = 0;
  for (i64 x : t.residues()) {
    i64 r = (j * x) % v;
    total += r;
    p.residues.emplace_back(r, v);
  }
  p.frac_sum = total / v;
  return p;
}

bool is_empty(const Tuple& t) {
  const i64 v = t.volume();
  for (i64 j = 1; j < v; ++j)
    if (class_sum(t.residues(), v, j).total < 2 * v) return false;
  return true;
}

bool is_hollow(const Tuple& t) {
  const i64 v = t.volume();
  for (i64 j = 1; j < v; ++j) {
    ClassSum s = class_sum(t.residues(), v, j);
    if (s.total == v && !s.has_zero) return false;
  }
  return true;
}

bool coprime_condition(const Tuple& t) {
  if (t.dim() < 3) raise(ErrorCode::InvalidArgument, "coprime condition needs d >= 3");
  const int threshold = t.dim() - 2;
  for (i64 p : prime_factors(t.volume())) {
    int hits = 0;
    for (i64 x : t.residues()) hits += (x % p == 0);
    if (hits >= threshold) return false;
  }
  return true;
}

bool facet_pairing_condition(const Tuple& t) {
  if (t.dim() != 4) raise(ErrorCode::InvalidArgument, "facet criterion is stated for d = 4");
  const i64 v = t.volume();
  for (std::size_t i = 0; i < 5; ++i) {
    const i64 vi = std::gcd(v, t[i]);
    if (vi == 1) continue;
    std::array<i64, 4> rest{};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j == i) continue;
      i64 r = t[j] % vi;
      if (std::gcd(r, vi) != 1) return false;
      rest[k++] = r;
    }
    if (!pairs_up(rest, vi)) return false;
  }
  return true;
}

bool empty_via_facets(const Tuple& t) {
  if (t.dim() != 4) raise(ErrorCode::InvalidArgument, "facet criterion is stated for d = 4");
  if (!is_hollow(t)) raise(ErrorCode::NotHollow, to_string(t) + " has interior lattice points");
  return facet_pairing_condition(t);
}

std::uint64_t count_lattice_points_by_coset(const Tuple& t, i64 dilation) {
  if (dilation < 0) raise(ErrorCode::InvalidArgument, "dilation must be nonnegative");
  const i64 v = t.volume();
  const i64 d = t.dim();
  std::uint64_t total = binomial(dilation + d, d);
  for (i64 j = 1; j < v; ++j) {
    i64 s = class_sum(t.residues(), v, j).total / v;
    total += binomial(dilation - s + d, d);
  }
  return total;
}

}  // namespace empty4
