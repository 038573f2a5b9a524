#pragma once

#include <cstdint>
#include <vector>

#include "toricoh/fan.hpp"

namespace toricoh {

// Partition of the ray indices by coefficient sign: r_i >= 0 on the nonneg
// set, r_i <= -1 on the complement. Only the signs matter downstream.
class SignPattern {
 public:
  SignPattern(std::size_t ray_count, std::vector<int> nonneg);
  static SignPattern from_divisor(const std::vector<Int>& r);
  static SignPattern from_negative(std::size_t ray_count, const std::vector<int>& negative);
  static SignPattern from_mask(std::size_t ray_count, std::uint64_t nonneg_mask);

  std::size_t ray_count() const { return ray_count_; }
  const std::vector<int>& nonneg() const { return nonneg_; }
  std::vector<int> negative() const;
  bool is_nonneg(int i) const;
  std::uint64_t mask() const;  // bit i set iff ray i is nonneg; ray_count <= 64

 private:
  std::size_t ray_count_;
  std::vector<int> nonneg_;  // sorted
};

// The simplicial complex on the nonneg vertices whose faces are the subsets
// lying inside some cone of the fan. The empty face is always present.
class SupportComplex {
 public:
  std::size_t ray_count() const { return ray_count_; }
  int top_dimension() const;  // -1 when only the empty face exists
  std::size_t face_count() const;  // excluding the empty face
  const std::vector<std::vector<int>>& faces_of_dimension(int d) const;
  const std::vector<std::vector<int>>& maximal_faces() const { return maximal_; }
  bool has_face(const std::vector<int>& sorted_vertices) const;

  friend SupportComplex support_complex(const Fan& fan, const SignPattern& pattern);

 private:
  std::size_t ray_count_ = 0;
  std::vector<std::vector<std::vector<int>>> faces_by_dim_;  // index d, faces sorted
  std::vector<std::vector<int>> maximal_;
};

SupportComplex support_complex(const Fan& fan, const SignPattern& pattern);

}  // namespace toricoh
