#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "toricoh/basics.hpp"

namespace toricoh {

// Dense integer matrix, row major. Never holds floating point.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  // Empty input gives a 0x0 matrix; rows must have equal lengths.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

  // Elementary operations; callers keep the transform bookkeeping.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row_dst += c * row_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);  // col_dst += c * col_src

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Bareiss fraction-free elimination; exact.
Int determinant(IntMatrix a);
std::size_t rank_of(IntMatrix a);

// Coefficients of det(lambda*I - M), highest degree first (monic).
// Faddeev-LeVerrier; all divisions exact.
std::vector<Int> characteristic_polynomial(const IntMatrix& m);

// (#positive, #negative) eigenvalues of a nonsingular symmetric integer
// matrix, via Descartes' rule on the characteristic polynomial (exact for
// polynomials with all real roots).
std::pair<std::size_t, std::size_t> symmetric_signature(const IntMatrix& m);

}  // namespace toricoh
