#include "empty4/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "empty4/error.hpp"

namespace empty4 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) raise(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const i64 x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

i64 determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) raise(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return static_cast<i64>(sign * a[(n - 1) * n + (n - 1)]);
}

namespace {

IntMatrix minor_of(const IntMatrix& m, int skip_r, int skip_c) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (int i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == skip_r) continue;
    for (int j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == skip_c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) raise(ErrorCode::InvalidArgument, "adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i64 c = determinant(minor_of(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

SmithForm smith_form(const IntMatrix& input) {
  const int n = input.rows();
  if (n != input.cols()) raise(ErrorCode::InvalidArgument, "Smith form needs a square matrix");
  IntMatrix a = input;
  IntMatrix linv = IntMatrix::identity(n);

  // Row operations on a are mirrored as inverse column operations on linv.
  auto row_addmul = [&](int dst, int src, i64 q) {  // row_dst += q * row_src
    if (q == 0) return;
    for (int c = 0; c < n; ++c) a(dst, c) += q * a(src, c);
    for (int r = 0; r < n; ++r) linv(r, src) -= q * linv(r, dst);
  };
  auto row_swap = [&](int i, int j) {
    a.swap_rows(i, j);
    linv.swap_cols(i, j);
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (int r = 0; r < n; ++r) linv(r, i) = -linv(r, i);
  };
  auto col_addmul = [&](int dst, int src, i64 q) {
    if (q == 0) return;
    for (int r = 0; r < n; ++r) a(r, dst) += q * a(r, src);
  };

  for (int t = 0; t < n; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a(i, j) != 0 && (pr < 0 || std::llabs(a(i, j)) < std::llabs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) raise(ErrorCode::Degenerate, "singular matrix has no Smith form here");
      row_swap(t, pr);
      a.swap_cols(t, pc);

      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        row_addmul(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        col_addmul(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_addmul(t, bad, 1);
    }
    if (a(t, t) < 0) row_negate(t);
  }

  SmithForm s;
  s.invariant_factors.resize(n);
  for (int i = 0; i < n; ++i) s.invariant_factors[i] = a(i, i);
  s.left_inverse = std::move(linv);
  return s;
}

IntMatrix column_lattice_basis(const IntMatrix& gens) {
  IntMatrix a = gens;
  const int rows = a.rows(), cols = a.cols();
  for (int r = 0; r < rows; ++r) {
    // Euclid across columns r..cols-1 in row r.
    while (true) {
      int best = -1;
      for (int c = r; c < cols; ++c)
        if (a(r, c) != 0 && (best < 0 || std::llabs(a(r, c)) < std::llabs(a(r, best)))) best = c;
      if (best < 0) raise(ErrorCode::Degenerate, "generators do not span a full-rank lattice");
      a.swap_cols(r, best);
      bool done = true;
      for (int c = r + 1; c < cols; ++c) {
        i64 q = a(r, c) / a(r, r);
        if (q != 0)
          for (int i = 0; i < rows; ++i) a(i, c) -= q * a(i, r);
        if (a(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, r) < 0)
      for (int i = 0; i < rows; ++i) a(i, r) = -a(i, r);
  }
  IntMatrix basis(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) basis(i, j) = a(i, j);
  return basis;
}

i64 maximal_minor_gcd(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  if (c > r) raise(ErrorCode::InvalidArgument, "expected a tall matrix");
  i64 g = 0;
  // Enumerate c-subsets of the rows.
  std::vector<int> pick(c);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    IntMatrix sub(c, c);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) sub(i, j) = m(pick[i], j);
    g = std::gcd(g, std::llabs(determinant(sub)));
    int k = c - 1;
    while (k >= 0 && pick[k] == r - c + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int i = k + 1; i < c; ++i) pick[i] = pick[i - 1] + 1;
  }
  return g;
}

}  // namespace empty4
