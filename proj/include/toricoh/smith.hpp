#pragma once

#include <optional>
#include <vector>

#include "toricoh/int_matrix.hpp"

namespace toricoh {

// left * a * right == diag(diag), with left and right unimodular and the
// diagonal entries nonnegative, each dividing the next.
struct SmithDecomposition {
  IntMatrix left;
  std::vector<Int> diag;
  IntMatrix right;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Inverse of a unimodular integer matrix; throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

// Solves a * x = b over the integers, one canonical solution or nothing.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// Precomputed decomposition for repeated integer solves against one matrix.
class LinearSolver {
 public:
  explicit LinearSolver(const IntMatrix& a);
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  std::size_t rows_, cols_;
  SmithDecomposition snf_;
};

// Columns form a lattice basis of { x : a * x = 0 }.
IntMatrix integer_kernel_basis(const IntMatrix& a);

struct CokernelCoords {
  std::vector<Int> free;     // coordinates in the free part
  std::vector<Int> torsion;  // residues mod the invariant factors > 1
};

// Presentation of Z^rows(a) / colspan(a).
class CokernelPresentation {
 public:
  explicit CokernelPresentation(const IntMatrix& a);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t image_rank() const { return image_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  CokernelCoords project(const std::vector<Int>& x) const;
  std::vector<Int> free_part(const std::vector<Int>& x) const;

  // A representative vector whose free part is the j-th unit vector.
  std::vector<Int> lift_free(std::size_t j) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t image_rank_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
  std::vector<std::size_t> torsion_rows_;
  SmithDecomposition snf_;
  IntMatrix left_inverse_;
};

}  // namespace toricoh
