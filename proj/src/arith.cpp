#include "empty4/arith.hpp"

namespace empty4 {

std::optional<i64> inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 r0 = mod(a, m), r1 = m;
  i64 s0 = 1, s1 = 0;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, m);
}

std::vector<i64> units_mod(i64 m) {
  if (m == 1) return {0};
  std::vector<i64> out;
  for (i64 u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  return out;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t binomial(i64 n, i64 k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (i64 i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(acc);
}

}  // namespace empty4
