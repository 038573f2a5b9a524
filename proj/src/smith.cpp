#include "toricoh/smith.hpp"

#include <algorithm>

namespace toricoh {

namespace {

// Smallest nonzero |entry| in the trailing submatrix, ties by position.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs_of(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition out{IntMatrix::identity(m), {}, IntMatrix::identity(n)};
  IntMatrix d = a;
  IntMatrix& u = out.left;
  IntMatrix& w = out.right;
  const std::size_t lim = std::min(m, n);

  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    w.swap_cols(t, pj);

    // Clear row and column t with gcd steps; each swap strictly shrinks
    // the pivot, so this terminates.
    bool clean = false;
    while (!clean) {
      for (std::size_t i = t + 1; i < m; ++i) {
        while (d.at(i, t) != 0) {
          Int q = d.at(i, t) / d.at(t, t);
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
          if (d.at(i, t) != 0) {
            d.swap_rows(i, t);
            u.swap_rows(i, t);
          }
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        while (d.at(t, j) != 0) {
          Int q = d.at(t, j) / d.at(t, t);
          d.add_col_multiple(j, t, -q);
          w.add_col_multiple(j, t, -q);
          if (d.at(t, j) != 0) {
            d.swap_cols(j, t);
            w.swap_cols(j, t);
          }
        }
      }
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (d.at(i, t) != 0) {
          clean = false;
          break;
        }
    }

    // Enforce the divisibility chain: fold an offending row into row t and
    // redo the pivot step.
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.add_row_multiple(t, i, 1);
          u.add_row_multiple(t, i, 1);
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  out.diag.resize(lim);
  for (std::size_t t = 0; t < lim; ++t) out.diag[t] = d.at(t, t);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw Error("unimodular inverse: matrix not square");
  SmithDecomposition s = smith_normal_form(u);
  for (const Int& e : s.diag)
    if (e != 1) throw Error("unimodular inverse: matrix is not unimodular");
  // s.left * u * s.right = I  =>  u^-1 = s.right * s.left
  return s.right * s.left;
}

namespace {

std::optional<std::vector<Int>> solve_with(const SmithDecomposition& s, std::size_t rows,
                                           std::size_t cols, const std::vector<Int>& b) {
  if (b.size() != rows) throw Error("solve: dimension mismatch");
  std::vector<Int> c = s.left.apply(b);
  const std::size_t lim = s.diag.size();
  std::vector<Int> y(cols);
  for (std::size_t t = 0; t < c.size(); ++t) {
    const Int d = t < lim ? s.diag[t] : Int(0);
    if (d == 0) {
      if (c[t] != 0) return std::nullopt;
    } else {
      if (c[t] % d != 0) return std::nullopt;
      y[t] = c[t] / d;
    }
  }
  return s.right.apply(y);
}

}  // namespace

LinearSolver::LinearSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const {
  return solve_with(snf_, rows_, cols_, b);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  return solve_with(smith_normal_form(a), a.rows(), a.cols(), b);
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t n = a.cols();
  const std::size_t lim = s.diag.size();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (j >= lim || s.diag[j] == 0) free_cols.push_back(j);
  IntMatrix k(n, free_cols.size());
  for (std::size_t c = 0; c < free_cols.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) k.at(i, c) = s.right.at(i, free_cols[c]);
  return k;
}

CokernelPresentation::CokernelPresentation(const IntMatrix& a)
    : ambient_(a.rows()), snf_(smith_normal_form(a)) {
  for (std::size_t t = 0; t < snf_.diag.size(); ++t) {
    if (snf_.diag[t] == 0) break;
    ++image_rank_;
    if (snf_.diag[t] > 1) {
      torsion_.push_back(snf_.diag[t]);
      torsion_rows_.push_back(t);
    }
  }
  free_rank_ = ambient_ - image_rank_;
  left_inverse_ = unimodular_inverse(snf_.left);
}

CokernelCoords CokernelPresentation::project(const std::vector<Int>& x) const {
  if (x.size() != ambient_) throw Error("cokernel project: dimension mismatch");
  std::vector<Int> y = snf_.left.apply(x);
  CokernelCoords out;
  out.free.assign(y.begin() + static_cast<std::ptrdiff_t>(image_rank_), y.end());
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
    Int r = y[torsion_rows_[k]] % torsion_[k];
    if (r < 0) r += torsion_[k];
    out.torsion.push_back(r);
  }
  return out;
}

std::vector<Int> CokernelPresentation::free_part(const std::vector<Int>& x) const {
  return project(x).free;
}

std::vector<Int> CokernelPresentation::lift_free(std::size_t j) const {
  if (j >= free_rank_) throw Error("cokernel lift: index out of range");
  return left_inverse_.col(image_rank_ + j);
}

}  // namespace toricoh
