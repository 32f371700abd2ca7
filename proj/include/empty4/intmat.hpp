#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "empty4/arith.hpp"

namespace empty4 {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  i64& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  i64 operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<i64> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free elimination).
i64 determinant(const IntMatrix& m);

/// adj(m), so that m * adj(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Smith normal form of a square nonsingular matrix: L * m * R = diag(f),
/// f[0] | f[1] | ... with f[i] > 0. Only L^-1 is kept, which is what maps
/// generators of Z^n / f back to Z^n / m Z^n.
struct SmithForm {
  std::vector<i64> invariant_factors;
  IntMatrix left_inverse;
};
SmithForm smith_form(const IntMatrix& m);

/// Lower-triangular basis of the lattice spanned by the columns of gens.
/// Throws Degenerate if the columns do not span full rank.
IntMatrix column_lattice_basis(const IntMatrix& gens);

/// gcd of all maximal minors of a rows x cols matrix with cols <= rows.
i64 maximal_minor_gcd(const IntMatrix& m);

}  // namespace empty4
