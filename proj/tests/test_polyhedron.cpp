#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "toricoh/polyhedron.hpp"

using namespace toricoh;
using testutil::Rng;

namespace {

Constraint geq(std::vector<long long> a, long long b) {
  return Constraint{testutil::to_ints(a), Int(b), Sense::GreaterEq};
}
Constraint leq(std::vector<long long> a, long long b) {
  return Constraint{testutil::to_ints(a), Int(b), Sense::LessEq};
}

// Exhaustive scan over [-radius, radius]^dim; the independent oracle.
std::vector<std::vector<Int>> brute_force(const RationalPolyhedron& p, long long radius) {
  std::vector<std::vector<Int>> out;
  std::vector<long long> x(p.dimension, -radius);
  while (true) {
    bool ok = true;
    for (const Constraint& c : p.constraints) {
      Int dot = 0;
      for (std::size_t j = 0; j < p.dimension; ++j) dot += c.normal[j] * x[j];
      if (c.sense == Sense::LessEq ? dot > c.bound : dot < c.bound) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(testutil::to_ints(x));
    std::size_t pos = p.dimension;
    bool rolled = true;
    while (pos > 0) {
      --pos;
      if (x[pos] < radius) {
        ++x[pos];
        for (std::size_t j = pos + 1; j < p.dimension; ++j) x[j] = -radius;
        rolled = false;
        break;
      }
    }
    if (rolled) break;
  }
  return out;
}

}  // namespace

TEST_CASE("lattice points of simple regions") {
  SUBCASE("unit square") {
    RationalPolyhedron p{2, {geq({1, 0}, 0), leq({1, 0}, 1), geq({0, 1}, 0), leq({0, 1}, 1)}};
    LatticePointResult r = lattice_points(p);
    CHECK(r.kind == Feasibility::Bounded);
    CHECK(r.points.size() == 4);
  }
  SUBCASE("halfline is unbounded") {
    RationalPolyhedron p{1, {geq({1}, 0)}};
    CHECK(lattice_points(p).kind == Feasibility::Unbounded);
  }
  SUBCASE("standard triangle scaled by two") {
    RationalPolyhedron p{2, {geq({1, 0}, 0), geq({0, 1}, 0), leq({1, 1}, 2)}};
    LatticePointResult r = lattice_points(p);
    CHECK(r.kind == Feasibility::Bounded);
    CHECK(r.points == brute_force(p, 4));
    CHECK(r.points.size() == 6);
  }
  SUBCASE("infeasible pair") {
    RationalPolyhedron p{1, {geq({1}, 1), leq({1}, 0)}};
    CHECK(lattice_points(p).kind == Feasibility::Empty);
  }
  SUBCASE("fractional slab holds no lattice point") {
    RationalPolyhedron p{1, {leq({2}, 1), geq({2}, 1)}};
    CHECK(lattice_points(p).kind == Feasibility::Empty);
  }
  SUBCASE("dimension zero") {
    RationalPolyhedron p{0, {}};
    LatticePointResult r = lattice_points(p);
    CHECK(r.kind == Feasibility::Bounded);
    CHECK(r.points.size() == 1);
  }
}

TEST_CASE("enumeration matches brute force on random boxes") {
  Rng rng(20240812);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 4));
    RationalPolyhedron p;
    p.dimension = dim;
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<long long> unit(dim, 0);
      unit[j] = 1;
      p.constraints.push_back(geq(unit, -5));
      p.constraints.push_back(leq(unit, 5));
    }
    int extra = static_cast<int>(rng.uniform(0, 4));
    for (int e = 0; e < extra; ++e) {
      std::vector<long long> a(dim);
      for (auto& v : a) v = rng.uniform(-3, 3);
      long long b = rng.uniform(-6, 6);
      p.constraints.push_back(rng.uniform(0, 1) ? leq(a, b) : geq(a, b));
    }
    LatticePointResult r = lattice_points(p);
    std::vector<std::vector<Int>> expect = brute_force(p, 5);
    if (expect.empty()) {
      CHECK(r.kind == Feasibility::Empty);
    } else {
      CHECK(r.kind == Feasibility::Bounded);
      CHECK(r.points == expect);
    }
  }
}

TEST_CASE("point counts are invariant under unimodular coordinate change") {
  Rng rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 3));
    RationalPolyhedron p;
    p.dimension = dim;
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<long long> unit(dim, 0);
      unit[j] = 1;
      p.constraints.push_back(geq(unit, static_cast<long long>(rng.uniform(-4, 0))));
      p.constraints.push_back(leq(unit, static_cast<long long>(rng.uniform(0, 4))));
    }
    IntMatrix u = testutil::random_unimodular(rng, dim, 6);
    RationalPolyhedron q = p;
    for (Constraint& c : q.constraints) {
      // substitute x = U y: normal row becomes a^T U
      std::vector<Int> na(dim);
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) na[j] += c.normal[i] * u.at(i, j);
      c.normal = std::move(na);
    }
    LatticePointResult rp = lattice_points(p);
    LatticePointResult rq = lattice_points(q);
    CHECK(rp.kind == rq.kind);
    CHECK(rp.points.size() == rq.points.size());
  }
}
