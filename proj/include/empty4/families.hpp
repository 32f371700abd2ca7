#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "empty4/tuple.hpp"

namespace empty4 {

enum class FamilyKind {
  Width1,           // (a+b, -a, -b, -1, 1)
  K2Primitive,      // (1, -2, a, -2a, 1+a)
  K2Nonprimitive,   // (-1, V/2-1, a, V/2-a, 2)
  K3Primitive,      // V-independent dependence b, index 1
  K3Nonprimitive,   // +-(V/I) a + b, index 2, 3, 4 or 6
};

/// A congruence condition on +-k = +-V/I: (+-k mod m == r) or (!= r).
struct Congruence {
  int modulus = 2;
  int residue = 0;
  bool equal = true;
};

/// One of the one-parameter families (the parameter being V itself).
struct FamilySpec {
  std::string id;
  int index = 1;                       // I
  std::array<i64, 5> offset{};         // I * a, all zero for index 1
  std::array<i64, 5> dependence{};     // b, sums to 0
  bool never_admissible = false;
  std::vector<Congruence> conditions;  // on +-k, index > 1 only
  std::array<i64, 5> max_facet{1, 1, 1, 1, 1};

  bool primitive() const noexcept { return index == 1; }
  /// +- only changes the tuple for I > 2.
  bool signed_family() const noexcept { return index > 2; }
};

/// The 29 index-1 families followed by the 23 rows of index 2, 4, 3, 6.
std::span<const FamilySpec> family_table();
std::span<const FamilySpec> primitive_families();
std::span<const FamilySpec> nonprimitive_families();
/// Throws InvalidArgument for an unknown id.
const FamilySpec& family_by_id(std::string_view id);

struct FamilyLabel {
  FamilyKind kind = FamilyKind::Width1;
  std::string id;             // table id for K3 kinds
  std::vector<i64> params;    // (alpha, beta) or (alpha), reduced mod V
  int sign = 1;               // K3Nonprimitive only

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
  friend auto operator<=>(const FamilyLabel&, const FamilyLabel&) = default;
};

std::string to_string(const FamilyLabel& label);

/// (a+b, -a, -b, -1, 1). Throws InvalidParams unless gcd(a, b, V) = 1.
Tuple generate_width1(i64 volume, i64 alpha, i64 beta);
/// (1, -2, a, -2a, 1+a). Throws InvalidParams unless gcd(a, V) = 1.
Tuple generate_k2_primitive(i64 volume, i64 alpha);
/// (-1, V/2-1, a, V/2-a, 2). Throws IndexMismatch for odd V and
/// InvalidParams unless gcd(a, V) = 1.
Tuple generate_k2_nonprimitive(i64 volume, i64 alpha);
/// sign * V a + b. Throws IndexMismatch if I does not divide V and
/// InvalidParams if the result does not generate (shared factor with V).
Tuple family_generate(const FamilySpec& spec, i64 volume, int sign = 1);

/// The six hollow (not necessarily empty) k = 2 constructions; which is 0..5.
/// Families 1..5 need even V.
Tuple generate_hollow_k2(int which, i64 volume, i64 alpha, i64 beta);

/// Volume conditions for emptiness of a family member.
bool admissible(const FamilySpec& spec, i64 volume, int sign = 1);
/// V odd for the primitive k = 2 family, V in 4Z for the other.
bool admissible_k2_primitive(i64 volume);
bool admissible_k2_nonprimitive(i64 volume);

/// Parameters (a, b) when the tuple has a pair of opposite units, scaled so
/// the pair is (-1, 1). The lexicographically smallest choice is returned.
std::optional<std::array<i64, 2>> width1_test(const Tuple& t);
std::optional<i64> match_k2_primitive(const Tuple& t);
std::optional<i64> match_k2_nonprimitive(const Tuple& t);

/// Canonical forms of all one-parameter family members of volume V, with
/// the labels producing each. Built once per V and cached.
class FamilyIndex {
 public:
  explicit FamilyIndex(i64 volume);
  i64 volume() const noexcept { return volume_; }
  const std::vector<FamilyLabel>* find(const CanonicalTuple& c) const;
  std::size_t size() const noexcept { return members_.size(); }

 private:
  i64 volume_;
  std::map<std::vector<i64>, std::vector<FamilyLabel>> members_;
};

std::shared_ptr<const FamilyIndex> family_index(i64 volume);

/// All family labels of a 4-tuple, sorted. Empty for other dimensions.
std::vector<FamilyLabel> family_membership(const Tuple& t);

/// family_membership(t) is nonempty; stops at the first match.
bool in_any_family(const Tuple& t);

enum class Verdict { Sporadic, Family, NotEmpty, NotHollow };

struct Classification {
  Verdict verdict = Verdict::Sporadic;
  std::vector<FamilyLabel> labels;
};

/// NotHollow / NotEmpty take precedence; hollow non-empty tuples still carry
/// their family labels.
Classification classify(const Tuple& t);

/// One line per outcome: `sporadic`, `not-hollow`, `not-empty`, and
/// `family <label>` for each label.
std::string format_classification(const Classification& c);

/// Human-readable listing of the embedded tables.
std::string format_family_tables();

}  // namespace empty4
