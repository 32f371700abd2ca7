#pragma once

// Glue between library types and the reference computations in oracles.hpp.

#include <doctest.h>

#include <random>

#include "empty4/geometry.hpp"
#include "empty4/tuple.hpp"
#include "oracles.hpp"

namespace support {

using empty4::i64;

inline oracle::Mat to_mat(const empty4::SimplexCoords& s) { return s.vertices(); }

inline empty4::SimplexCoords any_realization(const empty4::Tuple& t) {
  for (i64 b : t.residues())
    if (std::gcd(b, t.volume()) == 1) return empty4::realize(t);
  return empty4::realize_general(t);
}

// A small-coordinate realization, checked to be the same simplex as the
// plain one up to a unimodular map, so that box scans stay cheap.
inline oracle::Mat small_coords(const empty4::Tuple& t) {
  empty4::SimplexCoords s = any_realization(t);
  oracle::Mat a = to_mat(s), b = to_mat(empty4::reduced(s));
  REQUIRE(oracle::same_up_to_unimodular(a, b));
  REQUIRE(oracle::normalized_volume(b) == t.volume());
  return b;
}

// Uniform over valid tuples with the given volume and dimension.
inline empty4::Tuple random_tuple(std::mt19937_64& rng, i64 v, int d = 4) {
  std::uniform_int_distribution<i64> dist(0, v - 1);
  for (;;) {
    std::vector<i64> b(d + 1);
    i64 s = 0;
    for (int i = 0; i < d; ++i) s += b[i] = dist(rng);
    b[d] = oracle::mod(-s, v);
    i64 g = v;
    for (i64 x : b) g = std::gcd(g, x);
    if (g == 1) return empty4::Tuple::make(v, std::span<const i64>(b));
  }
}

inline std::vector<i64> vec(const empty4::Tuple& t) { return {t.residues().begin(), t.residues().end()}; }

}  // namespace support
