#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "empty4/intmat.hpp"
#include "empty4/lattice.hpp"
#include "empty4/tuple.hpp"

namespace empty4 {

/// d+1 affinely independent integer points in Z^d.
class SimplexCoords {
 public:
  /// Throws InvalidArgument on shape errors and Degenerate on singular input.
  static SimplexCoords make(std::vector<std::vector<i64>> vertices);

  int dim() const noexcept { return dim_; }
  std::span<const i64> vertex(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::vector<std::vector<i64>> vertices() const;

  /// Columns v_i - v_0 for i = 1..d.
  IntMatrix edge_matrix() const;

  friend bool operator==(const SimplexCoords&, const SimplexCoords&) = default;

 private:
  SimplexCoords(int dim, std::vector<i64> coords) : dim_(dim), coords_(std::move(coords)) {}
  int dim_ = 0;
  std::vector<i64> coords_;
};

/// One vertex per line, comma-separated integers; blank lines and lines
/// starting with '#' are skipped.
SimplexCoords parse_simplex(std::string_view text);
std::string to_string(const SimplexCoords& s);

/// Facet volumes indexed by the opposite vertex.
using FacetVolumes = std::vector<i64>;

struct HStar {
  std::array<i64, 5> h{};
  friend bool operator==(const HStar&, const HStar&) = default;
};

/// conv(e_1, ..., e_d, v) after scaling the tuple so that its first unit
/// entry becomes -1 and lifting the others to sum to V + 1. The vertex order
/// is e_1..e_d, v. Throws NoUnitEntry when no entry is a unit mod V.
SimplexCoords realize(const Tuple& t);

/// Any valid tuple: the standard simplex in the superlattice generated by
/// Z^d and the tuple's class, rewritten in a reduced basis of that lattice.
/// Vertex order matches the tuple order.
SimplexCoords realize_general(const Tuple& t);

/// Throws NotCyclic (message carries the invariant factors) or Degenerate.
Tuple tuple_from_simplex(const SimplexCoords& s);

/// Invariant factors of Z^d / (edge lattice), all of them, ascending.
std::vector<i64> quotient_invariant_factors(const SimplexCoords& s);

/// Normalized volume |det(v_1 - v_0, ..., v_d - v_0)|. Throws Degenerate.
i64 volume(const SimplexCoords& s);

/// Lattice width: min over nonzero integer functionals of max - min over
/// the vertices.
i64 width(const SimplexCoords& s);

/// gcd(V, b_i) for each i.
FacetVolumes facet_volumes(const Tuple& t);

/// Normalized volume of each facet from coordinates: gcd of the maximal
/// minors of the facet's edge vectors.
FacetVolumes facet_volumes_geometric(const SimplexCoords& s);

/// h* of an empty 4-simplex: (1, 0, (V+S)/2 - 3, (V-S)/2 + 2, 0).
/// Throws NotEmpty (or InvalidArgument for d != 4).
HStar hstar(const Tuple& t);

/// Coefficients of n^4, n^3, n^2, n, 1 of the Ehrhart polynomial of an empty
/// 4-simplex. Throws NotEmpty.
std::array<Rational, 5> ehrhart_polynomial(const Tuple& t);

/// A lattice-equivalent copy with v_0 at the origin and coordinates made
/// short by reducing the dual basis against the simplex's inertia form.
SimplexCoords reduced(const SimplexCoords& s);

/// True if some vertex bijection extends to an affine lattice automorphism
/// (integral transition matrix in both directions).
bool lattice_equivalent(const SimplexCoords& a, const SimplexCoords& b);

/// |nP ∩ Z^d| by scanning the integer bounding box of a reduced copy of nP
/// and testing barycentric nonnegativity exactly.
std::uint64_t count_lattice_points_brute(const SimplexCoords& s, i64 dilation = 1);

}  // namespace empty4
