#include "empty4/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "empty4/error.hpp"

namespace empty4 {

SimplexCoords SimplexCoords::make(std::vector<std::vector<i64>> vertices) {
  if (vertices.size() < 2) raise(ErrorCode::InvalidArgument, "a simplex needs at least 2 vertices");
  const int d = static_cast<int>(vertices.size()) - 1;
  if (d > kMaxDim) raise(ErrorCode::InvalidArgument, "dimension above " + std::to_string(kMaxDim));
  std::vector<i64> coords;
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != d)
      raise(ErrorCode::InvalidArgument, "expected " + std::to_string(d + 1) + " vertices with " +
                                            std::to_string(d) + " coordinates each");
    coords.insert(coords.end(), v.begin(), v.end());
  }
  SimplexCoords s(d, std::move(coords));
  if (determinant(s.edge_matrix()) == 0) raise(ErrorCode::Degenerate, "vertices are affinely dependent");
  return s;
}

std::vector<std::vector<i64>> SimplexCoords::vertices() const {
  std::vector<std::vector<i64>> out;
  for (int i = 0; i <= dim_; ++i) {
    auto v = vertex(i);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

IntMatrix SimplexCoords::edge_matrix() const {
  IntMatrix m(dim_, dim_);
  auto v0 = vertex(0);
  for (int j = 1; j <= dim_; ++j) {
    auto vj = vertex(j);
    for (int r = 0; r < dim_; ++r) m(r, j - 1) = vj[r] - v0[r];
  }
  return m;
}

SimplexCoords parse_simplex(std::string_view text) {
  std::vector<std::vector<i64>> verts;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<i64> v;
    while (true) {
      auto comma = line.find(',');
      std::string_view tok = line.substr(0, comma);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
      i64 x = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
        raise(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad coordinate '" + std::string(tok) + "'");
      v.push_back(x);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    verts.push_back(std::move(v));
  }
  try {
    return SimplexCoords::make(std::move(verts));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    std::string msg = e.what();
    auto colon = msg.find(": ");
    raise(ErrorCode::Parse, colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
}

std::string to_string(const SimplexCoords& s) {
  std::string out;
  for (int i = 0; i <= s.dim(); ++i) {
    auto v = s.vertex(i);
    for (int k = 0; k < s.dim(); ++k) {
      if (k) out += ',';
      out += std::to_string(v[k]);
    }
    out += '\n';
  }
  return out;
}

namespace {

SimplexCoords standard_simplex(int d) {
  std::vector<std::vector<i64>> verts(d + 1, std::vector<i64>(d, 0));
  for (int i = 1; i <= d; ++i) verts[i][i - 1] = 1;
  return SimplexCoords::make(std::move(verts));
}

// Rows of the returned matrix form an LLL-reduced basis of the integer dual
// lattice with respect to the quadratic form f -> sum_i (f . (v_i - c))^2.
IntMatrix reduced_functionals(const SimplexCoords& s) {
  const int d = s.dim();
  std::vector<double> centroid(d, 0.0);
  for (int i = 0; i <= d; ++i)
    for (int k = 0; k < d; ++k) centroid[k] += static_cast<double>(s.vertex(i)[k]);
  for (auto& c : centroid) c /= (d + 1);
  std::vector<double> gram(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i <= d; ++i) {
    auto v = s.vertex(i);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        gram[a * d + b] += (static_cast<double>(v[a]) - centroid[a]) * (static_cast<double>(v[b]) - centroid[b]);
  }
  IntMatrix basis = IntMatrix::identity(d);
  auto row = [&](int i) {
    std::vector<double> r(d);
    for (int a = 0; a < d; ++a) r[a] = static_cast<double>(basis(i, a));
    return r;
  };

  // Textbook LLL with delta = 3/4, Gram-Schmidt recomputed after every change.
  std::vector<std::vector<double>> mu(d, std::vector<double>(d, 0.0));
  std::vector<double> bstar_norm(d, 0.0);
  std::vector<std::vector<double>> bstar(d, std::vector<double>(d, 0.0));
  auto gso = [&]() {
    for (int i = 0; i < d; ++i) {
      bstar[i] = row(i);
      for (int j = 0; j < i; ++j) {
        double num = 0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) num += static_cast<double>(basis(i, a)) * gram[a * d + b] * bstar[j][b];
        mu[i][j] = bstar_norm[j] > 0 ? num / bstar_norm[j] : 0.0;
        for (int a = 0; a < d; ++a) bstar[i][a] -= mu[i][j] * bstar[j][a];
      }
      double nrm = 0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) nrm += bstar[i][a] * gram[a * d + b] * bstar[i][b];
      bstar_norm[i] = nrm;
    }
  };
  gso();
  int k = 1;
  int guard = 0;
  while (k < d && guard++ < 100000) {
    for (int j = k - 1; j >= 0; --j) {
      double q = std::round(mu[k][j]);
      if (q != 0) {
        i64 qi = static_cast<i64>(q);
        for (int a = 0; a < d; ++a) basis(k, a) -= qi * basis(j, a);
        gso();
      }
    }
    if (bstar_norm[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * bstar_norm[k - 1]) {
      ++k;
    } else {
      basis.swap_rows(k, k - 1);
      gso();
      k = std::max(k - 1, 1);
    }
  }
  return basis;
}

SimplexCoords apply_and_translate(const SimplexCoords& s, const IntMatrix& u) {
  const int d = s.dim();
  std::vector<std::vector<i64>> out;
  std::vector<i64> origin(d, 0);
  for (int i = 0; i <= d; ++i) {
    auto v = s.vertex(i);
    std::vector<i64> w(d, 0);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) w[r] += u(r, c) * v[c];
    if (i == 0) origin = w;
    for (int r = 0; r < d; ++r) w[r] -= origin[r];
    out.push_back(std::move(w));
  }
  return SimplexCoords::make(std::move(out));
}

}  // namespace

SimplexCoords realize(const Tuple& t) {
  const int d = t.dim();
  const i64 v = t.volume();
  if (v == 1) return standard_simplex(d);
  int unit_index = -1;
  for (int i = 0; i <= d; ++i)
    if (std::gcd(t[i], v) == 1) {
      unit_index = i;
      break;
    }
  if (unit_index < 0) raise(ErrorCode::NoUnitEntry, to_string(t) + " has no entry that is a unit");

  const i64 u = mod(-*inverse_mod(t[unit_index], v), v);
  std::vector<i64> w;
  for (int i = 0; i <= d; ++i)
    if (i != unit_index) w.push_back((u * t[i]) % v);
  // Lift so that sum(w) = V + 1; then the apex sits at lattice distance V
  // from the unimodular facet spanned by e_1..e_d.
  i64 sum = std::accumulate(w.begin(), w.end(), i64{0});
  while (sum > v + 1) {
    auto it = std::max_element(w.begin(), w.end());
    *it -= v;
    sum -= v;
  }
  while (sum < v + 1) {
    auto it = std::min_element(w.begin(), w.end());
    *it += v;
    sum += v;
  }
  std::vector<std::vector<i64>> verts;
  for (int i = 0; i < d; ++i) {
    std::vector<i64> e(d, 0);
    e[i] = 1;
    verts.push_back(std::move(e));
  }
  verts.push_back(std::move(w));
  return SimplexCoords::make(std::move(verts));
}

SimplexCoords realize_general(const Tuple& t) {
  const int d = t.dim();
  const i64 v = t.volume();
  if (v == 1) return standard_simplex(d);
  // V * (Z^d + Z g) with g = (b_1, ..., b_d) / V.
  IntMatrix gens(d, d + 1);
  for (int r = 0; r < d; ++r) {
    gens(r, r) = v;
    gens(r, d) = t[r + 1];
  }
  IntMatrix basis = column_lattice_basis(gens);
  IntMatrix adj = adjugate(basis);
  const i64 det = determinant(basis);
  // Coordinates of e_i in the basis basis / V:  V * basis^-1 e_i.
  std::vector<std::vector<i64>> verts;
  verts.emplace_back(d, 0);
  for (int i = 0; i < d; ++i) {
    std::vector<i64> x(d);
    for (int r = 0; r < d; ++r) {
      __int128 num = static_cast<__int128>(adj(r, i)) * v;
      if (num % det != 0) raise(ErrorCode::InvalidArgument, "internal: non-integral lattice coordinates");
      x[r] = static_cast<i64>(num / det);
    }
    verts.push_back(std::move(x));
  }
  return reduced(SimplexCoords::make(std::move(verts)));
}

std::vector<i64> quotient_invariant_factors(const SimplexCoords& s) {
  return smith_form(s.edge_matrix()).invariant_factors;
}

Tuple tuple_from_simplex(const SimplexCoords& s) {
  const int d = s.dim();
  IntMatrix m = s.edge_matrix();
  const i64 det = determinant(m);
  if (det == 0) raise(ErrorCode::Degenerate, "vertices are affinely dependent");
  const i64 v = std::llabs(det);
  if (v == 1) return Tuple::unimodular(d);

  SmithForm snf = smith_form(m);
  int nontrivial = 0;
  std::string profile;
  for (i64 f : snf.invariant_factors)
    if (f > 1) {
      ++nontrivial;
      profile += (profile.empty() ? "Z" : " + Z") + std::to_string(f);
    }
  if (nontrivial > 1) raise(ErrorCode::NotCyclic, "quotient group is " + profile);

  // Generator of the single nontrivial factor, pulled back to Z^d.
  std::vector<i64> g(d);
  for (int r = 0; r < d; ++r) g[r] = snf.left_inverse(r, d - 1);
  // V * M^-1 g = sign(det) * adj(M) g gives the scaled barycentric coordinates.
  IntMatrix adj = adjugate(m);
  const i64 sign = det > 0 ? 1 : -1;
  std::vector<i64> b(d + 1, 0);
  i64 rest = 0;
  for (int i = 0; i < d; ++i) {
    __int128 acc = 0;
    for (int k = 0; k < d; ++k) acc += static_cast<__int128>(adj(i, k)) * g[k];
    acc *= sign;
    b[i + 1] = static_cast<i64>(((acc % v) + v) % v);
    rest += b[i + 1];
  }
  b[0] = mod(-rest, v);
  return Tuple::make(v, b);
}

i64 volume(const SimplexCoords& s) {
  const i64 det = determinant(s.edge_matrix());
  if (det == 0) raise(ErrorCode::Degenerate, "vertices are affinely dependent");
  return std::llabs(det);
}

i64 width(const SimplexCoords& s) {
  const int d = s.dim();
  IntMatrix m = s.edge_matrix();
  const i64 det = determinant(m);
  if (det == 0) raise(ErrorCode::Degenerate, "vertices are affinely dependent");
  IntMatrix adj = adjugate(m);

  // A functional f is fixed by its values y_i = f(v_i - v_0); it is integral
  // iff y^T adj(M) = 0 mod det(M). Search y by increasing range.
  std::vector<i64> y(d);
  for (i64 w = 1;; ++w) {
    std::fill(y.begin(), y.end(), -w);
    while (true) {
      i64 lo = 0, hi = 0;
      bool nonzero = false;
      for (i64 x : y) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        nonzero |= (x != 0);
      }
      if (nonzero && hi - lo <= w) {
        bool integral = true;
        for (int k = 0; k < d && integral; ++k) {
          __int128 acc = 0;
          for (int i = 0; i < d; ++i) acc += static_cast<__int128>(y[i]) * adj(i, k);
          integral = (acc % det == 0);
        }
        if (integral) return w;
      }
      int p = 0;
      while (p < d && y[p] == w) y[p++] = -w;
      if (p == d) break;
      ++y[p];
    }
  }
}

FacetVolumes facet_volumes(const Tuple& t) {
  FacetVolumes out;
  for (i64 x : t.residues()) out.push_back(std::gcd(t.volume(), x));
  return out;
}

FacetVolumes facet_volumes_geometric(const SimplexCoords& s) {
  const int d = s.dim();
  volume(s);  // Degenerate check
  FacetVolumes out;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> idx;
    for (int i = 0; i <= d; ++i)
      if (i != skip) idx.push_back(i);
    IntMatrix e(d, d - 1);
    auto base = s.vertex(idx[0]);
    for (int j = 1; j < d; ++j) {
      auto vj = s.vertex(idx[j]);
      for (int r = 0; r < d; ++r) e(r, j - 1) = vj[r] - base[r];
    }
    out.push_back(d == 1 ? 1 : maximal_minor_gcd(e));
  }
  return out;
}

HStar hstar(const Tuple& t) {
  if (t.dim() != 4) raise(ErrorCode::InvalidArgument, "h* formula is for 4-simplices");
  if (!is_empty(t)) raise(ErrorCode::NotEmpty, to_string(t) + " is not empty");
  const i64 v = t.volume();
  const auto fv = facet_volumes(t);
  const i64 s = std::accumulate(fv.begin(), fv.end(), i64{0});
  if ((v + s) % 2 != 0) raise(ErrorCode::InvariantViolation, "V + S odd for " + to_string(t));
  return HStar{{1, 0, (v + s) / 2 - 3, (v - s) / 2 + 2, 0}};
}

std::array<Rational, 5> ehrhart_polynomial(const Tuple& t) {
  if (t.dim() != 4) raise(ErrorCode::InvalidArgument, "Ehrhart formula is for 4-simplices");
  if (!is_empty(t)) raise(ErrorCode::NotEmpty, to_string(t) + " is not empty");
  const i64 v = t.volume();
  const auto fv = facet_volumes(t);
  const i64 s = std::accumulate(fv.begin(), fv.end(), i64{0});
  return {Rational(v, 24), Rational(s, 12), Rational(3, 2) - Rational(v, 24), Rational(5, 2) - Rational(s, 12),
          Rational(1)};
}

bool lattice_equivalent(const SimplexCoords& a, const SimplexCoords& b) {
  const int d = a.dim();
  if (b.dim() != d || volume(a) != volume(b)) return false;
  IntMatrix eb = b.edge_matrix();
  const i64 det_b = determinant(eb);
  IntMatrix adj_b = adjugate(eb);
  std::vector<int> order(d + 1);
  std::iota(order.begin(), order.end(), 0);
  // Does x * adj(y) vanish mod det(y)?  Then x * y^-1 is integral.
  auto divides = [d](const IntMatrix& x, const IntMatrix& adj_y, i64 det_y) {
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        __int128 acc = 0;
        for (int k = 0; k < d; ++k) acc += static_cast<__int128>(x(r, k)) * adj_y(k, c);
        if (acc % det_y != 0) return false;
      }
    return true;
  };
  do {
    IntMatrix ea(d, d);
    auto base = a.vertex(order[0]);
    for (int j = 1; j <= d; ++j) {
      auto vj = a.vertex(order[j]);
      for (int r = 0; r < d; ++r) ea(r, j - 1) = vj[r] - base[r];
    }
    if (divides(eb, adjugate(ea), determinant(ea)) && divides(ea, adj_b, det_b)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

SimplexCoords reduced(const SimplexCoords& s) { return apply_and_translate(s, reduced_functionals(s)); }

std::uint64_t count_lattice_points_brute(const SimplexCoords& s, i64 dilation) {
  if (dilation < 0) raise(ErrorCode::InvalidArgument, "dilation must be nonnegative");
  if (dilation == 0) return 1;
  const int d = s.dim();
  std::vector<std::vector<i64>> scaled = s.vertices();
  for (auto& v : scaled)
    for (auto& x : v) x *= dilation;
  SimplexCoords p = reduced(SimplexCoords::make(std::move(scaled)));

  IntMatrix m = p.edge_matrix();
  const i64 det = determinant(m);
  const i64 sign = det > 0 ? 1 : -1;
  const i64 vol = std::llabs(det);
  IntMatrix adj = adjugate(m);

  std::vector<i64> lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    lo[k] = hi[k] = p.vertex(0)[k];
    for (int i = 1; i <= d; ++i) {
      lo[k] = std::min(lo[k], p.vertex(i)[k]);
      hi[k] = std::max(hi[k], p.vertex(i)[k]);
    }
  }
  auto origin = p.vertex(0);
  std::uint64_t count = 0;
  std::vector<i64> x = lo;
  while (true) {
    // Scaled barycentric coordinates: vol * M^-1 (x - v_0), plus the
    // remaining coordinate vol - sum.
    i64 total = 0;
    bool inside = true;
    for (int i = 0; i < d && inside; ++i) {
      __int128 acc = 0;
      for (int k = 0; k < d; ++k) acc += static_cast<__int128>(adj(i, k)) * (x[k] - origin[k]);
      acc *= sign;
      if (acc < 0) inside = false;
      total += static_cast<i64>(acc);
    }
    if (inside && total <= vol) ++count;
    int k = 0;
    while (k < d && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == d) break;
    ++x[k];
  }
  return count;
}

}  // namespace empty4
