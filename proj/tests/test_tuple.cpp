#include <doctest.h>

#include <random>
#include <set>

#include "empty4/error.hpp"
#include "empty4/tuple.hpp"
#include "oracles.hpp"

using namespace empty4;

namespace {

std::vector<i64> vec(const Tuple& t) { return {t.residues().begin(), t.residues().end()}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

// Random valid tuple: d entries uniform, the last fixes the sum, retried
// until the generator condition holds.
Tuple random_tuple(std::mt19937_64& rng, i64 v, int d = 4) {
  std::uniform_int_distribution<i64> dist(0, v - 1);
  for (;;) {
    std::vector<i64> b(d + 1);
    i64 s = 0;
    for (int i = 0; i < d; ++i) s += b[i] = dist(rng);
    b[d] = oracle::mod(-s, v);
    i64 g = v;
    for (i64 x : b) g = std::gcd(g, x);
    if (g == 1) return Tuple::make(v, std::span<const i64>(b));
  }
}

}  // namespace

TEST_CASE("mk_tuple reduces entries into [0, V)") {
  CHECK(vec(Tuple::make(100, {9, 1, -2, -3, -5})) == std::vector<i64>{9, 1, 98, 97, 95});
  Tuple one = Tuple::make(1, {0, 0, 0, 0, 0});
  CHECK(one == Tuple::unimodular());
  CHECK(vec(Tuple::make(7, {-12, 16, 3, 0, 0})) == std::vector<i64>{2, 2, 3, 0, 0});
}

TEST_CASE("mk_tuple rejects invalid input") {
  CHECK(code_of([] { Tuple::make(5, {1, 1, 1, 1, 2}); }) == ErrorCode::SumNotZero);
  CHECK(code_of([] { Tuple::make(4, {2, -2, 2, -2}); }) == ErrorCode::NotGenerator);
  CHECK(code_of([] { Tuple::make(0, {0, 0, 0, 0, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Tuple::make(-3, {1, 2, 0, 0, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Tuple::make(5, {1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parse_tuple") {
  CHECK(parse_tuple("100:9,1,-2,-3,-5") == Tuple::make(100, {9, 1, -2, -3, -5}));
  CHECK(parse_tuple(" 5 : 2, 3, 4, 1, 0 ") == Tuple::make(5, {2, 3, 4, 1, 0}));
  CHECK(parse_tuple("5:2,-2,-1,1").dim() == 3);
  CHECK(to_string(parse_tuple("100:9,1,-2,-3,-5")) == "100:9,1,98,97,95");
  for (const char* bad : {"", "100", "100:", "x:1,2", "5:1,,2,2,0", "5:1,2,3,4,a", "5;1,2,2,0,0", "5:1,2,2,0,0,"})
    CHECK_MESSAGE(code_of([&] { parse_tuple(bad); }) == ErrorCode::Parse, bad);
  CHECK(code_of([] { parse_tuple("5:1,2,2,0", 4); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_tuple("5:1,1,1,1,2"); }) == ErrorCode::SumNotZero);
}

TEST_CASE("unit_multiply") {
  Tuple t = Tuple::make(100, {9, 1, -2, -3, -5});
  CHECK(vec(unit_multiply(t, 11)) == std::vector<i64>{99, 11, 78, 67, 45});
  CHECK(unit_multiply(t, 11) == Tuple::make(100, {-1, 11, -22, 67, 45}));
  CHECK(unit_multiply(t, 1) == t);
  CHECK(vec(unit_multiply(Tuple::make(5, {2, 3, 4, 1, 0}), 2)) == std::vector<i64>{4, 1, 3, 2, 0});
  CHECK(code_of([&] { unit_multiply(t, 5); }) == ErrorCode::NotAUnit);
  CHECK(unit_multiply(t, -1) == unit_multiply(t, 99));
}

TEST_CASE("canonical_form examples") {
  Tuple t = Tuple::make(100, {9, 1, -2, -3, -5});
  CHECK(canonical_form(t) == canonical_form(unit_multiply(t, 11)));
  CHECK(canonical_form(Tuple::make(5, {2, -2, -1, 1, 0})) == canonical_form(Tuple::make(5, {1, -1, -3, 3, 0})));
  CHECK(vec(canonical_form(t).tuple()) == oracle::canonical(100, vec(t)));
  CHECK(canonical_form(Tuple::unimodular()).tuple() == Tuple::unimodular());
}

TEST_CASE("canonical_form matches the exhaustive oracle") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 400; ++iter) {
    i64 v = 1 + static_cast<i64>(rng() % 60);
    Tuple t = random_tuple(rng, v);
    CHECK(vec(canonical_form(t).tuple()) == oracle::canonical(v, vec(t)));
  }
  // Exhaustive for one small volume, including tuples without unit entries.
  for (i64 a = 0; a < 12; ++a)
    for (i64 b = 0; b < 12; ++b)
      for (i64 c = 0; c < 12; ++c) {
        std::vector<i64> r{a, b, c, 6, oracle::mod(-a - b - c - 6, 12)};
        i64 g = 12;
        for (i64 x : r) g = std::gcd(g, x);
        if (g != 1) continue;
        CHECK(vec(canonical_form(Tuple::make(12, std::span<const i64>(r))).tuple()) == oracle::canonical(12, r));
      }
}

TEST_CASE("canonical_form is idempotent and action invariant") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    i64 v = 1 + static_cast<i64>(rng() % 80);
    Tuple t = random_tuple(rng, v);
    CanonicalTuple c = canonical_form(t);
    CHECK(canonical_form(c.tuple()) == c);
    auto us = oracle::units(v);
    i64 u = us[rng() % us.size()];
    std::vector<int> sigma{0, 1, 2, 3, 4};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Tuple moved = permute(v == 1 ? t : unit_multiply(t, u), sigma);
    CHECK(canonical_form(moved) == c);
  }
}

TEST_CASE("canonical_form in dimension 3") {
  Tuple t = Tuple::make(5, {2, -2, -1, 1});
  CHECK(vec(canonical_form(t).tuple()) == oracle::canonical(5, vec(t)));
  CHECK(canonical_form(t).tuple().dim() == 3);
}

TEST_CASE("CanonicalTuple::adopt") {
  CanonicalTuple c = canonical_form(Tuple::make(39, {5, 8, 13, 14, 38}));
  CHECK(CanonicalTuple::adopt(c.tuple()) == c);
  CHECK(code_of([] { CanonicalTuple::adopt(Tuple::make(39, {5, 8, 13, 14, 38})); }) ==
        ErrorCode::InvariantViolation);
}

TEST_CASE("is_isomorphic") {
  Tuple t = Tuple::make(100, {9, 1, -2, -3, -5});
  CHECK(is_isomorphic(t, Tuple::make(100, {-1, 11, -22, 67, 45})));
  CHECK_FALSE(is_isomorphic(Tuple::make(7, {2, -1, -1, -1, 1}), Tuple::make(7, {1, -2, 1, -2, 2})));
  CHECK(oracle::canonical(7, {2, 6, 6, 6, 1}) != oracle::canonical(7, {1, 5, 1, 5, 2}));
  for (i64 u : oracle::units(100)) CHECK(is_isomorphic(t, unit_multiply(t, u)));
  CHECK_FALSE(is_isomorphic(t, Tuple::make(99, {9, 1, -2, -3, -5})));
}

TEST_CASE("is_isomorphic is an equivalence relation on samples") {
  std::mt19937_64 rng(5);
  // Small volumes so that random pairs are often isomorphic.
  std::vector<Tuple> ts;
  for (int i = 0; i < 60; ++i) ts.push_back(random_tuple(rng, 5 + static_cast<i64>(rng() % 3)));
  for (const auto& a : ts) {
    CHECK(is_isomorphic(a, a));
    for (const auto& b : ts) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      CHECK(is_isomorphic(a, b) == (oracle::canonical(a.volume(), vec(a)) == oracle::canonical(b.volume(), vec(b)) &&
                                    a.volume() == b.volume()));
      if (!is_isomorphic(a, b)) continue;
      for (const auto& c : ts)
        if (is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
    }
  }
}

namespace {

// Permutations sigma with b[sigma[i]] = u b[i] for some unit u.
std::set<Permutation> symmetries_oracle(const Tuple& t) {
  std::set<Permutation> out;
  Permutation p(t.size());
  std::iota(p.begin(), p.end(), 0);
  auto us = oracle::units(t.volume());
  do {
    for (i64 u : us) {
      bool ok = true;
      for (std::size_t i = 0; i < t.size() && ok; ++i)
        ok = t[p[i]] == oracle::mod(u * t[i], t.volume());
      if (ok) {
        out.insert(p);
        break;
      }
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int orbit_count(const std::set<Permutation>& g, std::size_t n) {
  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  for (const auto& p : g)
    for (std::size_t i = 0; i < n; ++i) {
      int a = rep[i], b = rep[p[i]];
      int lo = std::min(a, b), hi = std::max(a, b);
      for (auto& r : rep)
        if (r == hi) r = lo;
    }
  return static_cast<int>(std::set<int>(rep.begin(), rep.end()).size());
}

}  // namespace

TEST_CASE("symmetry_group examples") {
  SymmetryGroup g1 = symmetry_group(Tuple::unimodular());
  CHECK(g1.elements.size() == 120);
  CHECK(g1.orbit_count == 1);

  Tuple t = Tuple::make(5, {1, -1, 2, -2, 0});
  SymmetryGroup g = symmetry_group(t);
  CHECK(std::find(g.elements.begin(), g.elements.end(), Permutation{1, 0, 3, 2, 4}) != g.elements.end());
  auto expected = symmetries_oracle(t);
  CHECK(std::set<Permutation>(g.elements.begin(), g.elements.end()) == expected);
  CHECK(g.orbit_count == orbit_count(expected, 5));

  Tuple t2 = Tuple::make(39, {5, 8, 13, 14, 38});
  CHECK(symmetry_group(t2).orbit_count == orbit_count(symmetries_oracle(t2), 5));
}

TEST_CASE("symmetry_group matches the exhaustive oracle and is closed") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 150; ++iter) {
    i64 v = 1 + static_cast<i64>(rng() % 30);
    Tuple t = random_tuple(rng, v);
    SymmetryGroup g = symmetry_group(t);
    std::set<Permutation> got(g.elements.begin(), g.elements.end());
    auto expected = symmetries_oracle(t);
    CHECK(got == expected);
    CHECK(g.orbit_count == orbit_count(expected, 5));
    for (const auto& a : got)
      for (const auto& b : got) {
        Permutation ab(5);
        for (int i = 0; i < 5; ++i) ab[i] = a[b[i]];
        CHECK(got.count(ab) == 1);
      }
    std::set<i64> distinct(t.residues().begin(), t.residues().end());
    if (distinct.size() == 5 && got.size() == 1) CHECK(g.orbit_count == 5);
  }
}
