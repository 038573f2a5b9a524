#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "toricoh/cohomology.hpp"
#include "toricoh/fan.hpp"
#include "toricoh/int_matrix.hpp"

namespace toricoh {

class ChowRing;

// Graded ring element, coordinates per degree over the ring's monomial basis.
class ChowElement {
 public:
  ChowElement() = default;

  const ChowRing& ring() const { return *ring_; }
  const std::vector<Int>& degree(std::size_t k) const { return coords_[k]; }
  bool is_zero() const;

  ChowElement operator+(const ChowElement& rhs) const;
  ChowElement operator-(const ChowElement& rhs) const;
  ChowElement operator-() const;
  ChowElement scaled(const Int& c) const;
  bool operator==(const ChowElement& rhs) const;

  friend class ChowRing;

 private:
  const ChowRing* ring_ = nullptr;
  std::vector<std::vector<Int>> coords_;  // index = degree 0..n
};

// Intersection ring of a del Pezzo fan in square-free monomial coordinates:
// degree-k classes are spanned by the k-dimensional cones, with the linear
// relations sum_i <m, v_i> E_i = 0 pushed up degree by degree, and products
// of divisors supported outside a common cone vanishing.
class ChowRing {
 public:
  explicit ChowRing(const Fan& fan);

  const Fan& fan() const { return fan_; }
  std::size_t dimension() const { return n_; }
  const PicardPresentation& picard() const { return picard_; }

  std::size_t degree_rank(std::size_t k) const { return basis_[k].size(); }
  // k-faces chosen as the monomial basis in degree k.
  std::vector<std::vector<int>> basis_faces(std::size_t k) const;

  ChowElement zero() const;
  ChowElement one() const;
  // Class of a single square-free face monomial.
  ChowElement face_class(const std::vector<int>& sorted_face) const;
  ChowElement divisor_class(const std::vector<Int>& divisor) const;
  ChowElement class_element(const std::vector<Int>& pic_coords) const;

  ChowElement multiply(const ChowElement& a, const ChowElement& b) const;
  Int top_coordinate(const ChowElement& e) const;

  // Gram matrix of the degree-1 basis under the top pairing (surfaces only).
  IntMatrix degree_one_intersection_matrix() const;

 private:
  Fan fan_;
  std::size_t n_;
  PicardPresentation picard_;
  std::vector<std::vector<std::vector<int>>> faces_;       // per degree
  std::vector<std::map<std::vector<int>, std::size_t>> face_index_;
  std::vector<std::vector<std::size_t>> basis_;            // face indices per degree
  std::vector<std::vector<std::vector<Int>>> reduction_;   // per degree, per face: basis coords
  mutable std::mutex memo_mutex_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>,
                   std::vector<Int>>
      product_memo_;

  void build_degree(std::size_t k);
  std::vector<Int> reduce_combination(std::size_t k,
                                      const std::map<std::vector<int>, Int>& combo) const;
  std::map<std::vector<int>, Int> expand_face_product(const std::vector<int>& a,
                                                      const std::vector<int>& b) const;
  const std::vector<Int>& basis_product(std::size_t p, std::size_t ai, std::size_t q,
                                        std::size_t bi) const;
};

ChowRing build_chow(const Fan& fan);

// c1 = x1 + x2, c2 = x1 * x2 for two divisor classes given in Pic coordinates.
std::pair<ChowElement, ChowElement> chern_pair(const ChowRing& ring,
                                               const std::vector<Int>& x1_coords,
                                               const std::vector<Int>& x2_coords);

// Every class x2 with coordinates in [-box, box]^rank satisfying
// x1 + x2 = c1 and x1 * x2 = c2 for x1 = c1 - x2, where (c1, c2) is the
// Chern pair of (d1, -d1). The classes d1 and -d1 are always included.
std::vector<std::vector<Int>> splitting_candidates(const ChowRing& ring,
                                                   const std::vector<Int>& d1_coords,
                                                   const Int& box);

// chi(D) = 1 + (D.D + D.(-K))/2 on a del Pezzo surface; the division is
// exact and a parity failure signals a ring bug.
Int riemann_roch_chi(const ChowRing& ring, const std::vector<Int>& class_coords);

}  // namespace toricoh
