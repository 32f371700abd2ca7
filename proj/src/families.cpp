#include "empty4/families.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "empty4/error.hpp"
#include "empty4/lattice.hpp"

namespace empty4 {
namespace {

using A5 = std::array<i64, 5>;

FamilySpec prim(std::string id, A5 b, A5 max_facet = {1, 1, 1, 1, 1}) {
  FamilySpec s;
  s.id = std::move(id);
  s.dependence = b;
  s.max_facet = max_facet;
  return s;
}

Congruence eq(int m, int r) { return {m, r, true}; }
Congruence ne(int m, int r) { return {m, r, false}; }

FamilySpec nonprim(std::string id, int index, A5 offset, A5 b, std::vector<Congruence> conds, A5 max_facet) {
  FamilySpec s;
  s.id = std::move(id);
  s.index = index;
  s.offset = offset;
  s.dependence = b;
  s.conditions = std::move(conds);
  s.max_facet = max_facet;
  return s;
}

FamilySpec never(std::string id, int index, A5 offset, A5 b) {
  FamilySpec s;
  s.id = std::move(id);
  s.index = index;
  s.offset = offset;
  s.dependence = b;
  s.never_admissible = true;
  return s;
}

const std::vector<FamilySpec>& table() {
  static const std::vector<FamilySpec> t = {
      prim("P01", {9, 1, -2, -3, -5}, {1, 1, 2, 1, 5}),
      prim("P02", {9, 2, -1, -4, -6}),
      prim("P03", {12, 3, -4, -5, -6}, {1, 1, 1, 5, 1}),
      prim("P04", {12, 2, -3, -4, -7}, {1, 1, 1, 1, 7}),
      prim("P05", {9, 4, -2, -3, -8}),
      prim("P06", {12, 1, -2, -3, -8}),
      prim("P07", {12, 3, -1, -6, -8}),
      prim("P08", {15, 4, -5, -6, -8}),
      prim("P09", {12, 2, -1, -4, -9}),
      prim("P10", {10, 6, -2, -5, -9}),
      prim("P11", {15, 1, -2, -5, -9}, {1, 1, 2, 1, 1}),
      prim("P12", {12, 5, -3, -4, -10}),
      prim("P13", {15, 2, -3, -4, -10}),
      prim("P14", {6, 4, 3, -1, -12}),
      prim("P15", {7, 5, 3, -1, -14}, {1, 5, 3, 1, 2}),
      prim("P16", {9, 7, 1, -3, -14}, {1, 1, 1, 1, 2}),
      prim("P17", {15, 7, -3, -5, -14}, {1, 1, 1, 1, 2}),
      prim("P18", {8, 5, 3, -1, -15}, {8, 1, 1, 1, 1}),
      prim("P19", {10, 6, 1, -2, -15}),
      prim("P20", {12, 5, 2, -4, -15}),
      prim("P21", {9, 6, 4, -1, -18}),
      prim("P22", {9, 6, 5, -2, -18}, {1, 1, 5, 1, 1}),
      prim("P23", {12, 9, 1, -4, -18}),
      prim("P24", {10, 7, 4, -1, -20}, {1, 7, 1, 1, 1}),
      prim("P25", {10, 8, 3, -1, -20}, {1, 1, 3, 1, 1}),
      prim("P26", {10, 9, 4, -3, -20}),
      prim("P27", {12, 10, 1, -3, -20}),
      prim("P28", {12, 8, 5, -1, -24}, {1, 1, 5, 1, 1}),
      prim("P29", {15, 10, 6, -1, -30}),

      nonprim("N2-1", 2, {0, 0, 1, 1, 0}, {3, -1, -6, 2, 2}, {eq(2, 1), ne(3, 0)}, {1, 1, 1, 1, 2}),
      nonprim("N2-2", 2, {1, 0, 0, 0, 1}, {4, -3, 1, -4, 2}, {eq(2, 1)}, {1, 3, 1, 2, 1}),
      never("N2-3", 2, {0, 0, 1, 0, 1}, {4, -2, -6, 3, 1}),
      nonprim("N2-4", 2, {1, 0, 0, 0, 1}, {2, 3, -1, -8, 4}, {eq(2, 1)}, {1, 3, 1, 2, 1}),
      nonprim("N2-5", 2, {0, 1, 1, 0, 0}, {1, -6, 2, 6, -3}, {eq(2, 1), ne(3, 0)}, {1, 1, 1, 2, 1}),
      nonprim("N2-6", 2, {1, 0, 1, 0, 0}, {6, -8, 4, -3, 1}, {eq(2, 1), ne(3, 0)}, {1, 2, 1, 1, 1}),
      never("N2-7", 2, {0, 1, 0, 0, 1}, {1, 6, -4, -6, 3}),
      nonprim("N2-8", 2, {1, 0, 0, 0, 1}, {4, 3, -1, -12, 6}, {eq(2, 1), ne(3, 0)}, {1, 1, 1, 2, 1}),
      never("N2-9", 2, {0, 1, 0, 0, 1}, {3, -1, 4, -12, 6}),

      nonprim("N4-1", 4, {2, 1, 1, 0, 0}, {3, -3, 1, -2, 1}, {eq(2, 0), ne(3, 0)}, {1, 1, 1, 2, 1}),
      never("N4-2", 4, {0, 1, 1, 0, 2}, {1, 2, -1, -4, 2}),
      never("N4-3", 4, {0, 0, 1, 2, 1}, {1, -4, 1, 4, -2}),
      nonprim("N4-4", 4, {0, 1, 1, 0, 2}, {1, 3, -1, -6, 3}, {eq(2, 0), ne(3, 0)}, {1, 1, 1, 2, 1}),

      nonprim("N3-1", 3, {0, 0, 2, 1, 0}, {-3, 2, 1, 1, -1}, {eq(3, 0)}, {3, 2, 1, 1, 1}),
      nonprim("N3-2", 3, {1, 0, 2, 0, 0}, {3, -3, 1, -2, 1}, {eq(3, 2)}, {1, 3, 1, 2, 1}),
      nonprim("N3-3", 3, {0, 0, 1, 2, 0}, {-3, 1, 2, 2, -2}, {eq(2, 1), eq(3, 0)}, {3, 1, 1, 1, 1}),
      nonprim("N3-4", 3, {0, 0, 1, 2, 0}, {4, -2, -4, 1, 1}, {eq(2, 1), ne(3, 1)}, {1, 1, 1, 1, 1}),
      nonprim("N3-5", 3, {1, 0, 2, 0, 0}, {3, -6, 2, 2, -1}, {eq(2, 1), eq(3, 1)}, {1, 3, 1, 1, 1}),
      nonprim("N3-6", 3, {1, 0, 2, 0, 0}, {4, -6, 1, 2, -1}, {eq(2, 1), eq(3, 0)}, {1, 3, 1, 1, 1}),
      nonprim("N3-7", 3, {1, 0, 2, 0, 0}, {4, -3, 1, -4, 2}, {eq(2, 1), eq(3, 0)}, {1, 3, 1, 1, 1}),
      never("N3-8", 3, {1, 0, 2, 0, 0}, {2, -1, 2, -6, 3}),
      nonprim("N3-9", 3, {0, 0, 1, 1, 1}, {1, -6, 2, 6, -3}, {eq(2, 1), eq(3, 2)}, {1, 3, 1, 1, 1}),

      nonprim("N6-1", 6, {1, 0, 0, 4, 1}, {1, -3, 1, 2, -1}, {eq(2, 0), eq(3, 0)}, {1, 3, 1, 2, 1}),
  };
  return t;
}

constexpr std::size_t kPrimitiveCount = 29;

Tuple make_or_invalid(i64 volume, std::span<const i64> raw) {
  try {
    return Tuple::make(volume, raw);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotGenerator) raise(ErrorCode::InvalidParams, e.what());
    throw;
  }
}

void require_volume(i64 volume) {
  if (volume < 1) raise(ErrorCode::InvalidArgument, "volume must be positive");
}

}  // namespace

std::span<const FamilySpec> family_table() { return table(); }
std::span<const FamilySpec> primitive_families() { return std::span(table()).first(kPrimitiveCount); }
std::span<const FamilySpec> nonprimitive_families() { return std::span(table()).subspan(kPrimitiveCount); }

const FamilySpec& family_by_id(std::string_view id) {
  for (const auto& s : table())
    if (s.id == id) return s;
  raise(ErrorCode::InvalidArgument, "unknown family id '" + std::string(id) + "'");
}

std::string to_string(const FamilyLabel& label) {
  auto p = [&](std::size_t i) { return std::to_string(label.params.at(i)); };
  switch (label.kind) {
    case FamilyKind::Width1: return "k1 alpha=" + p(0) + " beta=" + p(1);
    case FamilyKind::K2Primitive: return "k2-primitive alpha=" + p(0);
    case FamilyKind::K2Nonprimitive: return "k2-nonprimitive alpha=" + p(0);
    case FamilyKind::K3Primitive: return "k3 " + label.id;
    case FamilyKind::K3Nonprimitive: return "k3 " + label.id + (label.sign > 0 ? " sign=+" : " sign=-");
  }
  return {};
}

Tuple generate_width1(i64 volume, i64 alpha, i64 beta) {
  require_volume(volume);
  if (std::gcd(std::gcd(alpha, beta), volume) != 1)
    raise(ErrorCode::InvalidParams, "width-one family needs gcd(alpha, beta, V) = 1");
  const std::array<i64, 5> raw{alpha + beta, -alpha, -beta, -1, 1};
  return Tuple::make(volume, raw);
}

Tuple generate_k2_primitive(i64 volume, i64 alpha) {
  require_volume(volume);
  if (std::gcd(alpha, volume) != 1) raise(ErrorCode::InvalidParams, "k=2 family needs gcd(alpha, V) = 1");
  alpha = mod(alpha, volume);
  const std::array<i64, 5> raw{1, -2, alpha, -2 * alpha, 1 + alpha};
  return Tuple::make(volume, raw);
}

Tuple generate_k2_nonprimitive(i64 volume, i64 alpha) {
  require_volume(volume);
  if (volume % 2 != 0) raise(ErrorCode::IndexMismatch, "family of index 2 needs even V");
  if (std::gcd(alpha, volume) != 1) raise(ErrorCode::InvalidParams, "k=2 family needs gcd(alpha, V) = 1");
  alpha = mod(alpha, volume);
  const std::array<i64, 5> raw{-1, volume / 2 - 1, alpha, volume / 2 - alpha, 2};
  return Tuple::make(volume, raw);
}

Tuple family_generate(const FamilySpec& spec, i64 volume, int sign) {
  require_volume(volume);
  if (volume % spec.index != 0)
    raise(ErrorCode::IndexMismatch, spec.id + " needs V divisible by " + std::to_string(spec.index));
  const i64 k = sign * (volume / spec.index);
  std::array<i64, 5> raw{};
  for (int i = 0; i < 5; ++i) raw[i] = mod(k * spec.offset[i] + spec.dependence[i], volume);
  return make_or_invalid(volume, raw);
}

Tuple generate_hollow_k2(int which, i64 volume, i64 alpha, i64 beta) {
  require_volume(volume);
  if (which < 0 || which > 5) raise(ErrorCode::InvalidArgument, "hollow k=2 family index must be 0..5");
  if (which > 0 && volume % 2 != 0) raise(ErrorCode::IndexMismatch, "family of index 2 needs even V");
  const i64 h = volume / 2;
  std::array<i64, 5> raw{};
  switch (which) {
    case 0: raw = {beta, -2 * beta, alpha, -2 * alpha, beta + alpha}; break;
    case 1: raw = {beta, h + beta, alpha, h - alpha, -2 * beta}; break;
    case 2: raw = {alpha + beta, -alpha, -beta, h, h}; break;
    case 3: raw = {alpha, -alpha, beta, h - beta, h}; break;
    case 4: raw = {alpha + beta, -alpha, -2 * beta, h + beta, h}; break;
    case 5: raw = {beta, alpha - 2 * beta, -alpha, h + beta, h}; break;
  }
  for (auto& x : raw) x = mod(x, volume);
  return make_or_invalid(volume, raw);
}

bool admissible(const FamilySpec& spec, i64 volume, int sign) {
  require_volume(volume);
  if (spec.primitive()) {
    for (i64 p : prime_factors(volume)) {
      int hits = 0;
      for (i64 x : spec.dependence) hits += (x % p == 0);
      if (hits >= 2) return false;
    }
    return true;
  }
  if (volume % spec.index != 0)
    raise(ErrorCode::IndexMismatch, spec.id + " needs V divisible by " + std::to_string(spec.index));
  if (spec.never_admissible) return false;
  const i64 k = sign * (volume / spec.index);
  for (const auto& c : spec.conditions) {
    const bool holds = mod(k, c.modulus) == c.residue;
    if (holds != c.equal) return false;
  }
  return true;
}

bool admissible_k2_primitive(i64 volume) { return volume % 2 != 0; }
bool admissible_k2_nonprimitive(i64 volume) { return volume % 4 == 0; }

std::optional<std::array<i64, 2>> width1_test(const Tuple& t) {
  if (t.dim() != 4) return std::nullopt;
  const i64 v = t.volume();
  std::optional<std::array<i64, 2>> best;
  for (int i = 0; i < 5; ++i) {
    auto inv = inverse_mod(t[i], v);
    if (!inv) continue;
    for (int j = 0; j < 5; ++j) {
      if (j == i || mod(t[i] + t[j], v) != 0) continue;
      // Scale so that b_i = 1 and b_j = -1 (the swapped pair covers -u).
      std::array<i64, 3> rest{};
      int n = 0;
      for (int r = 0; r < 5; ++r)
        if (r != i && r != j) rest[n++] = mod(*inv * t[r], v);
      for (int s = 0; s < 3; ++s) {
        const i64 y = rest[(s + 1) % 3], z = rest[(s + 2) % 3];
        for (auto cand : {std::array<i64, 2>{mod(-y, v), mod(-z, v)}, std::array<i64, 2>{mod(-z, v), mod(-y, v)}})
          if (!best || cand < *best) best = cand;
      }
    }
  }
  return best;
}

std::optional<i64> match_k2_primitive(const Tuple& t) {
  if (t.dim() != 4) return std::nullopt;
  const i64 v = t.volume();
  std::optional<i64> best;
  for (int p = 0; p < 5; ++p) {
    auto inv = inverse_mod(t[p], v);
    if (!inv) continue;
    std::array<i64, 5> c{};
    for (int i = 0; i < 5; ++i) c[i] = mod(*inv * t[i], v);
    for (int q = 0; q < 5; ++q) {
      if (q == p || c[q] != mod(-2, v)) continue;
      std::array<int, 3> rest{};
      int n = 0;
      for (int r = 0; r < 5; ++r)
        if (r != p && r != q) rest[n++] = r;
      for (int s = 0; s < 3; ++s) {
        const i64 a = c[rest[s]];
        if (std::gcd(a, v) != 1) continue;
        const i64 x = c[rest[(s + 1) % 3]], y = c[rest[(s + 2) % 3]];
        const i64 m2 = mod(-2 * a, v), p1 = mod(1 + a, v);
        if ((x == m2 && y == p1) || (x == p1 && y == m2))
          if (!best || a < *best) best = a;
      }
    }
  }
  return best;
}

std::optional<i64> match_k2_nonprimitive(const Tuple& t) {
  if (t.dim() != 4) return std::nullopt;
  const i64 v = t.volume();
  if (v % 2 != 0) return std::nullopt;
  const i64 h = v / 2;
  std::optional<i64> best;
  for (int p = 0; p < 5; ++p) {
    auto inv = inverse_mod(t[p], v);
    if (!inv) continue;
    std::array<i64, 5> c{};
    for (int i = 0; i < 5; ++i) c[i] = mod(-*inv * t[i], v);
    for (int q = 0; q < 5; ++q) {
      if (q == p || c[q] != mod(h - 1, v)) continue;
      for (int s = 0; s < 5; ++s) {
        if (s == p || s == q || c[s] != mod(2, v)) continue;
        std::array<int, 2> rest{};
        int n = 0;
        for (int r = 0; r < 5; ++r)
          if (r != p && r != q && r != s) rest[n++] = r;
        for (int o = 0; o < 2; ++o) {
          const i64 a = c[rest[o]];
          if (std::gcd(a, v) == 1 && c[rest[1 - o]] == mod(h - a, v))
            if (!best || a < *best) best = a;
        }
      }
    }
  }
  return best;
}

FamilyIndex::FamilyIndex(i64 volume) : volume_(volume) {
  require_volume(volume);
  for (const auto& spec : table()) {
    if (volume % spec.index != 0) continue;
    for (int sign : {1, -1}) {
      if (sign < 0 && !spec.signed_family()) break;
      std::optional<Tuple> t;
      try {
        t = family_generate(spec, volume, sign);
      } catch (const Error&) {
        continue;
      }
      auto c = canonical_form(*t);
      FamilyLabel label;
      label.kind = spec.primitive() ? FamilyKind::K3Primitive : FamilyKind::K3Nonprimitive;
      label.id = spec.id;
      label.sign = sign;
      auto r = c.residues();
      members_[std::vector<i64>(r.begin(), r.end())].push_back(std::move(label));
    }
  }
}

const std::vector<FamilyLabel>* FamilyIndex::find(const CanonicalTuple& c) const {
  if (c.volume() != volume_ || c.tuple().dim() != 4) return nullptr;
  auto r = c.residues();
  auto it = members_.find(std::vector<i64>(r.begin(), r.end()));
  return it == members_.end() ? nullptr : &it->second;
}

std::shared_ptr<const FamilyIndex> family_index(i64 volume) {
  static std::mutex mu;
  static std::map<i64, std::shared_ptr<const FamilyIndex>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(volume);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const FamilyIndex>(volume);
  std::lock_guard lock(mu);
  return cache.emplace(volume, std::move(built)).first->second;
}

std::vector<FamilyLabel> family_membership(const Tuple& t) {
  std::vector<FamilyLabel> out;
  if (t.dim() != 4) return out;
  const i64 v = t.volume();
  if (auto ab = width1_test(t); ab && std::gcd(std::gcd((*ab)[0], (*ab)[1]), v) == 1)
    out.push_back({FamilyKind::Width1, "", {(*ab)[0], (*ab)[1]}, 1});
  if (auto a = match_k2_primitive(t)) out.push_back({FamilyKind::K2Primitive, "", {*a}, 1});
  if (auto a = match_k2_nonprimitive(t)) out.push_back({FamilyKind::K2Nonprimitive, "", {*a}, 1});
  if (const auto* k3 = family_index(v)->find(canonical_form(t))) out.insert(out.end(), k3->begin(), k3->end());
  std::sort(out.begin(), out.end());
  return out;
}

bool in_any_family(const Tuple& t) {
  if (t.dim() != 4) return false;
  const i64 v = t.volume();
  if (auto ab = width1_test(t); ab && std::gcd(std::gcd((*ab)[0], (*ab)[1]), v) == 1) return true;
  if (match_k2_primitive(t) || match_k2_nonprimitive(t)) return true;
  return family_index(v)->find(canonical_form(t)) != nullptr;
}

Classification classify(const Tuple& t) {
  Classification c;
  if (!is_hollow(t)) {
    c.verdict = Verdict::NotHollow;
    return c;
  }
  c.labels = family_membership(t);
  if (!is_empty(t))
    c.verdict = Verdict::NotEmpty;
  else
    c.verdict = c.labels.empty() ? Verdict::Sporadic : Verdict::Family;
  return c;
}

std::string format_classification(const Classification& c) {
  std::string out;
  switch (c.verdict) {
    case Verdict::NotHollow: return "not-hollow\n";
    case Verdict::NotEmpty: out = "not-empty\n"; break;
    case Verdict::Sporadic: return "sporadic\n";
    case Verdict::Family: break;
  }
  for (const auto& l : c.labels) out += "family " + to_string(l) + '\n';
  return out;
}

namespace {

std::string vec(const A5& a) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

std::string symbolic(const FamilySpec& spec) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ',';
    const i64 a = spec.offset[i], b = spec.dependence[i];
    if (a == 0) {
      s += std::to_string(b);
      continue;
    }
    s += spec.signed_family() ? "+-" : "";
    s += (a == 1 ? "" : std::to_string(a)) + "k";
    if (b > 0) s += "+" + std::to_string(b);
    if (b < 0) s += std::to_string(b);
  }
  return s + ")";
}

}  // namespace

std::string format_family_tables() {
  std::string out;
  out += "k=1   (a+b,-a,-b,-1,1)        gcd(a,b,V)=1\n";
  out += "k=2   (1,-2,a,-2a,1+a)         gcd(a,V)=1, V odd\n";
  out += "k=2   (-1,V/2-1,a,V/2-a,2)     gcd(a,V)=1, V in 4Z\n\n";
  out += "primitive, k=3 (V not divisible by the listed primes)\n";
  for (const auto& s : primitive_families()) {
    std::vector<i64> bad;
    for (i64 p = 2; p <= 30; ++p) {
      if (prime_factors(p).size() != 1 || prime_factors(p)[0] != p) continue;
      int hits = 0;
      for (i64 x : s.dependence) hits += (x % p == 0);
      if (hits >= 2) bad.push_back(p);
    }
    std::string primes;
    for (i64 p : bad) primes += (primes.empty() ? "" : ",") + std::to_string(p);
    out += s.id + "  " + vec(s.dependence) + "  V not in {" + primes + "}Z  max facets " + vec(s.max_facet) + "\n";
  }
  out += "\nnon-primitive, k=3 (k = V/I)\n";
  for (const auto& s : nonprimitive_families()) {
    out += s.id + "  I=" + std::to_string(s.index) + "  " + symbolic(s) + "  ";
    if (s.never_admissible) {
      out += "never empty\n";
      continue;
    }
    std::string conds;
    for (const auto& c : s.conditions)
      conds += (conds.empty() ? "" : ", ") + std::string("k mod ") + std::to_string(c.modulus) + (c.equal ? " = " : " != ") +
               std::to_string(c.residue);
    out += conds + "  max facets " + vec(s.max_facet) + "\n";
  }
  return out;
}

}  // namespace empty4
