#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "empty4/tuple.hpp"

namespace empty4 {

using Rational = boost::rational<i64>;

/// Barycentric data of the lattice-point class j * generator.
struct CosetProfile {
  i64 j = 0;
  std::vector<Rational> residues;  // ((j * b_i) mod V) / V
  i64 frac_sum = 0;                // sum of residues, always an integer
};

/// Throws InvalidArgument unless 1 <= j < V.
CosetProfile coset_profile(const Tuple& t, i64 j);

/// No lattice points besides the vertices: every nonzero class has
/// fractional barycentric sum at least 2.
bool is_empty(const Tuple& t);

/// No interior lattice point: no class has fractional sum 1 with all
/// coordinates nonzero.
bool is_hollow(const Tuple& t);

/// No prime factor of V divides d-2 or more entries (two entries for d = 4).
/// Requires d >= 3.
bool coprime_condition(const Tuple& t);

/// Facet-based emptiness criterion for hollow 4-simplices: for every facet of
/// volume V_i = gcd(V, b_i) > 1, the entries mod V_i form {0, a, -a, c, -c}
/// with a, c units mod V_i. Throws NotHollow on non-hollow input and
/// InvalidArgument unless d = 4.
bool empty_via_facets(const Tuple& t);

/// The facet condition alone, without the hollowness precondition. Used as
/// a cheap necessary screen for emptiness.
bool facet_pairing_condition(const Tuple& t);

/// |nP ∩ Λ|: class j contributes C(n - s_j + d, d) points, with s_0 = 0.
std::uint64_t count_lattice_points_by_coset(const Tuple& t, i64 dilation);

}  // namespace empty4
