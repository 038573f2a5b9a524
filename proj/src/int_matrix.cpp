#include "toricoh/int_matrix.hpp"

#include <algorithm>

namespace toricoh {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw Error("matrix apply: dimension mismatch");
  std::vector<Int> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

Int determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t p = r;
    while (p < n && a.at(p, r) == 0) ++p;
    if (p == n) return 0;
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(r, r) - a.at(i, r) * a.at(r, j)) / prev;
      a.at(i, r) = 0;
    }
    prev = a.at(r, r);
  }
  return sign < 0 ? Int(-prev) : prev;
}

std::size_t rank_of(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a.at(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("characteristic polynomial: matrix not square");
  const std::size_t n = m.rows();
  std::vector<Int> coeff(n + 1);
  coeff[0] = 1;
  IntMatrix mk = m;  // M_1 = M
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = M * (M_{k-1} + c_{k-1} I)
      IntMatrix t = mk;
      for (std::size_t i = 0; i < n; ++i) t.at(i, i) += coeff[k - 1];
      mk = m * t;
    }
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    coeff[k] = -tr / Int(k);  // exact
  }
  return coeff;
}

namespace {

std::size_t sign_variations(const std::vector<Int>& coeff) {
  std::size_t v = 0;
  int last = 0;
  for (const Int& c : coeff) {
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::pair<std::size_t, std::size_t> symmetric_signature(const IntMatrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i)) throw Error("signature: matrix not symmetric");
  std::vector<Int> p = characteristic_polynomial(m);
  if (p.back() == 0) throw Error("signature: matrix is singular");
  std::size_t pos = sign_variations(p);
  std::vector<Int> q = p;  // q(lambda) = p(-lambda)
  for (std::size_t k = 0; k < q.size(); ++k)
    if ((q.size() - 1 - k) % 2 == 1) q[k] = -q[k];
  std::size_t neg = sign_variations(q);
  if (pos + neg != n) throw Error("signature: root count mismatch");
  return {pos, neg};
}

}  // namespace toricoh
