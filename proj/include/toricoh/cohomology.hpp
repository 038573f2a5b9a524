#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "toricoh/fan.hpp"
#include "toricoh/homology.hpp"
#include "toricoh/polyhedron.hpp"
#include "toricoh/smith.hpp"
#include "toricoh/support_complex.hpp"

namespace toricoh {

// Pic as the cokernel of m -> (<m, v_i>)_i. Free for smooth complete fans.
class PicardPresentation {
 public:
  explicit PicardPresentation(const Fan& fan);

  std::size_t rank() const { return rank_; }
  std::vector<Int> class_of(const std::vector<Int>& divisor) const;
  bool is_principal(const std::vector<Int>& divisor) const;
  // Divisor vector whose class has the j-th unit coordinate.
  const std::vector<Int>& basis_divisor(std::size_t j) const { return basis_[j]; }
  // Representative divisor of a class given by coordinates.
  std::vector<Int> representative(const std::vector<Int>& coords) const;

 private:
  std::size_t ray_count_;
  std::size_t rank_;
  CokernelPresentation coker_;
  std::vector<std::vector<Int>> basis_;
};

struct PatternAudit {
  std::uint64_t nonneg_mask = 0;
  std::vector<int> negative;                     // 0-based ray indices
  std::vector<std::pair<int, Int>> degree_ranks; // (q, homology rank), nonzero only
  Int points = 0;                                // chamber lattice point count
};

struct CohomologyTable {
  std::vector<Int> h;  // h^0 .. h^n
  Int euler = 0;
  std::vector<PatternAudit> audit;  // patterns with nonzero homology, mask order
};

inline constexpr std::size_t kDefaultMaxRays = 20;

struct H1Class {
  std::vector<Int> class_coords;
  std::vector<Int> representative;  // lexicographically smallest in the box
  Int h1 = 0;
};

// Sums homology rank x chamber point count over the 2^rays sign patterns.
// Degree q reduced homology of a pattern's support complex lands in
// h^{n-1-q}; the all-nonneg pattern feeds h^0 and the all-negative one h^n.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(Fan fan, std::size_t max_rays = kDefaultMaxRays);

  const Fan& fan() const { return fan_; }
  const PicardPresentation& picard() const { return picard_; }

  CohomologyTable cohomology(const std::vector<Int>& divisor) const;
  // h^1 of l1 - l2: the dimension of the extension space with l2-type
  // quotient and l1-type sub.
  Int ext_dimension(const std::vector<Int>& l1, const std::vector<Int>& l2) const;
  // All divisor classes with a representative in [-box, box]^rays and
  // nonzero h^1, each reported once.
  std::vector<H1Class> search_h1(const Int& box) const;

 private:
  Fan fan_;
  std::size_t max_rays_;
  PicardPresentation picard_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, HomologyProfile> profile_cache_;

  const HomologyProfile& pattern_profile(std::uint64_t mask) const;
  RationalPolyhedron chamber(const std::vector<Int>& divisor, std::uint64_t mask) const;
};

// The divisor of shape (c,...,c,0,c,...,c,0,c,...,c) with zeros exactly at
// the 1-based positions i and n+1+i of a del Pezzo fan; coeffs are the 2n
// positive values for the remaining positions in increasing position order.
std::vector<Int> prop43_divisor(const Fan& fan, std::size_t i, const std::vector<Int>& coeffs);
std::vector<Int> prop43_uniform_divisor(const Fan& fan, std::size_t i, const Int& coeff);

}  // namespace toricoh
