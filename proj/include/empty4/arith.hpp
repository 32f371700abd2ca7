#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace empty4 {

using i64 = std::int64_t;

/// Representative of a modulo m in [0, m).
constexpr i64 mod(i64 a, i64 m) noexcept {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Multiplicative inverse of a modulo m, if gcd(a, m) = 1.
std::optional<i64> inverse_mod(i64 a, i64 m);

/// Residues in [1, m) coprime to m; for m = 1 the single class {0}.
std::vector<i64> units_mod(i64 m);

/// Distinct prime factors in increasing order.
std::vector<i64> prime_factors(i64 n);

/// Binomial coefficient C(n, k) for small arguments, 0 when n < k or n < 0.
std::uint64_t binomial(i64 n, i64 k);

}  // namespace empty4
