#pragma once

#include <cstddef>
#include <vector>

#include "toricoh/basics.hpp"

namespace toricoh {

enum class Sense { LessEq, GreaterEq };

// normal . x  (sense)  bound, all data integral. Strict inequalities never
// reach this interface; callers pre-translate a.x < b into a.x <= b - 1.
struct Constraint {
  std::vector<Int> normal;
  Int bound;
  Sense sense = Sense::LessEq;
};

struct RationalPolyhedron {
  std::size_t dimension = 0;
  std::vector<Constraint> constraints;
};

enum class Feasibility { Empty, Bounded, Unbounded };

struct LatticePointResult {
  Feasibility kind = Feasibility::Empty;
  // Lexicographically sorted, each point once; populated only when Bounded.
  std::vector<std::vector<Int>> points;
};

// Fourier-Motzkin elimination back to front, then a nested integer interval
// scan. Output sensitive; intended for the small chambers this engine meets.
LatticePointResult lattice_points(const RationalPolyhedron& p);

}  // namespace toricoh
