#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricoh/basics.hpp"

namespace toricoh {

struct ValidationReport {
  bool smooth = false;
  bool complete = false;
  std::vector<std::string> diagnostics;
};

enum class FanFamily { Custom, Projective, DelPezzo };

// Complete simplicial fan candidate. Ray order is part of the identity:
// divisor vectors are positional. Cone ray indices are 0-based internally;
// the JSON schema and the CLI speak 1-based.
class Fan {
 public:
  Fan(std::size_t dimension, std::vector<std::vector<Int>> rays,
      std::vector<std::vector<int>> max_cones, FanFamily family = FanFamily::Custom,
      std::size_t family_n = 0);

  std::size_t dimension() const { return dimension_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<Int>& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<std::vector<Int>>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }

  // Distinct m-dimensional cones as sorted ray index sets; m = 0 gives the
  // zero cone (empty set). Faces of max cones, closed under subsets.
  const std::vector<std::vector<int>>& cones_of_dimension(std::size_t m) const;

  // True when the index set lies inside some cone of the fan.
  bool spans_cone(const std::vector<int>& sorted_idxs) const;

  const ValidationReport& validation() const { return validation_; }
  bool is_verified() const { return validation_.smooth && validation_.complete; }

  FanFamily family() const { return family_; }
  std::size_t family_n() const { return family_n_; }

 private:
  std::size_t dimension_;
  std::vector<std::vector<Int>> rays_;
  std::vector<std::vector<int>> max_cones_;
  std::vector<std::vector<std::vector<int>>> faces_by_dim_;
  std::vector<std::uint64_t> max_cone_masks_;  // only when ray_count <= 64
  FanFamily family_;
  std::size_t family_n_;
  ValidationReport validation_;

  void check_structure() const;
  void build_face_closure();
  void run_validation();
};

// n+1 rays e_1..e_n, -e_1-...-e_n; max cones omit one ray each.
Fan build_projective_fan(std::size_t n);

// 2n+2 rays v_i = e_i, v_{n+1} = -e_1-...-e_n, v_{n+1+i} = -v_i; max cones
// <x_i (i in I), y_j (j in J)> over disjoint I, J in {1..n+1} with
// #I = #J = n/2. Requires n even.
Fan build_del_pezzo_fan(std::size_t n);

struct SymmetryReport {
  std::size_t pairs = 0;          // unordered ray pairs {v, -v}
  std::size_t order = 0;          // rank of the span of all paired rays
  bool hypothesis_met = false;    // pairs >= order + 1
};

SymmetryReport symmetry_report(const Fan& fan);

// The all-(-1) coefficient vector.
std::vector<Int> canonical_divisor(const Fan& fan);

}  // namespace toricoh
