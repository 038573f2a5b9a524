#pragma once

#include <vector>

#include "toricoh/support_complex.hpp"

namespace toricoh {

enum class CoefficientRing { Rational, Integer, Mod2 };

// Reduced homology ranks (and, over the integers, torsion invariant factors)
// per degree. Degree -1 belongs to the augmentation: the complex {emptyset}
// has rank 1 there and nothing else.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(int top_degree, CoefficientRing ring)
      : top_(top_degree), ring_(ring), ranks_(static_cast<std::size_t>(top_degree + 2)),
        torsion_(static_cast<std::size_t>(top_degree + 2)) {}

  int min_degree() const { return -1; }
  int max_degree() const { return top_; }
  CoefficientRing ring() const { return ring_; }

  const Int& rank(int q) const;
  Int& rank_ref(int q) { return ranks_[static_cast<std::size_t>(q + 1)]; }
  const std::vector<Int>& torsion(int q) const;
  std::vector<Int>& torsion_ref(int q) { return torsion_[static_cast<std::size_t>(q + 1)]; }

  bool all_zero() const;
  Int reduced_euler() const;  // sum (-1)^q rank_q

  bool operator==(const HomologyProfile&) const = default;

 private:
  int top_ = -1;
  CoefficientRing ring_ = CoefficientRing::Rational;
  std::vector<Int> ranks_;             // index q + 1
  std::vector<std::vector<Int>> torsion_;  // Integer ring only
};

HomologyProfile reduced_homology(const SupportComplex& c,
                                 CoefficientRing ring = CoefficientRing::Rational);

struct CycleCheck {
  bool holds = false;
  // Incidence count of every (d-1)-face in d-faces, total over (d-1)-faces.
  std::vector<std::pair<std::vector<int>, std::size_t>> incidence;
  std::size_t d_face_count = 0;
};

// Pseudocycle test: holds iff the complex has at least one d-face and every
// (d-1)-face meeting a d-face lies in exactly two of them.
CycleCheck cycle_criterion(const SupportComplex& c, int d);

}  // namespace toricoh
