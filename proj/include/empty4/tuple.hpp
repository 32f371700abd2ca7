#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "empty4/arith.hpp"

namespace empty4 {

inline constexpr int kDefaultDim = 4;
inline constexpr int kMaxDim = 8;

/// A cyclic lattice d-simplex of normalized volume V, encoded by the
/// barycentric coordinates (scaled by V) of a generator of its quotient
/// group. Residues are stored in [0, V); they sum to 0 mod V and together
/// with V have gcd 1.
class Tuple {
 public:
  /// Reduces raw entries mod V and checks the invariants.
  /// Throws SumNotZero, NotGenerator, or InvalidArgument.
  static Tuple make(i64 volume, std::span<const i64> raw);
  static Tuple make(i64 volume, std::initializer_list<i64> raw) {
    return make(volume, std::span<const i64>(raw.begin(), raw.size()));
  }

  /// The volume-1 tuple in dimension d (all residues zero).
  static Tuple unimodular(int dim = kDefaultDim);

  int dim() const noexcept { return static_cast<int>(residues_.size()) - 1; }
  i64 volume() const noexcept { return volume_; }
  std::span<const i64> residues() const noexcept { return residues_; }
  i64 operator[](std::size_t i) const { return residues_[i]; }
  std::size_t size() const noexcept { return residues_.size(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b);

 private:
  Tuple(i64 volume, std::vector<i64> residues)
      : volume_(volume), residues_(std::move(residues)) {}

  i64 volume_ = 1;
  std::vector<i64> residues_;

  friend class CanonicalTuple;
  friend Tuple unchecked_tuple(i64 volume, std::vector<i64> residues);
};

/// Same as Tuple::make; named after the operation it implements.
inline Tuple mk_tuple(i64 volume, std::span<const i64> raw) { return Tuple::make(volume, raw); }

/// The isomorphism-class representative: the lexicographically smallest
/// residue sequence among all permutations of all unit multiples.
class CanonicalTuple {
 public:
  const Tuple& tuple() const noexcept { return tuple_; }
  operator const Tuple&() const noexcept { return tuple_; }
  i64 volume() const noexcept { return tuple_.volume(); }
  std::span<const i64> residues() const noexcept { return tuple_.residues(); }

  /// Wraps a tuple already known to be canonical (e.g. read back from a
  /// census). Throws InvariantViolation if it is not.
  static CanonicalTuple adopt(const Tuple& t);

  friend bool operator==(const CanonicalTuple&, const CanonicalTuple&) = default;
  friend std::strong_ordering operator<=>(const CanonicalTuple& a, const CanonicalTuple& b) {
    return a.tuple_ <=> b.tuple_;
  }

 private:
  explicit CanonicalTuple(Tuple t) : tuple_(std::move(t)) {}
  Tuple tuple_;
  friend CanonicalTuple canonical_form(const Tuple& t);
  friend CanonicalTuple canonical_from_sorted(i64 volume, std::span<const i64> residues);
};

using Permutation = std::vector<int>;

struct SymmetryGroup {
  /// Permutations sigma with b[sigma[i]] == u * b[i] (mod V) for some unit u.
  std::vector<Permutation> elements;
  /// Vertex orbit representative for each index (smallest index in the orbit).
  std::vector<int> orbit_of;
  int orbit_count = 0;
};

/// Parses `V:b0,b1,...`; residues may be any integers. If expected_dim >= 0
/// the entry count must be expected_dim + 1.
Tuple parse_tuple(std::string_view text, int expected_dim = -1);
std::string to_string(const Tuple& t);

/// Throws NotAUnit if gcd(u, V) != 1.
Tuple unit_multiply(const Tuple& t, i64 u);

/// result[i] = t[sigma[i]].
Tuple permute(const Tuple& t, std::span<const int> sigma);

CanonicalTuple canonical_form(const Tuple& t);
bool is_isomorphic(const Tuple& a, const Tuple& b);
SymmetryGroup symmetry_group(const Tuple& t);

/// Allocation-free canonicalization kernel shared with the enumerator: writes
/// the canonical residues of (V, b) into out (same length as b).
void canonical_residues(i64 volume, std::span<const i64> b, std::span<i64> out);

/// Trusted constructor for residues already known to be canonical.
CanonicalTuple canonical_from_sorted(i64 volume, std::span<const i64> residues);

}  // namespace empty4
