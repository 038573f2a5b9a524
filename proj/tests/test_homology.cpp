#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "toricoh/homology.hpp"

using namespace toricoh;
using testutil::Rng;

namespace {

std::vector<std::vector<int>> all_faces(const SupportComplex& c) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= c.top_dimension(); ++d)
    for (const auto& f : c.faces_of_dimension(d)) out.push_back(f);
  return out;
}

// Reduced Euler characteristic straight from face counts.
Int face_euler(const SupportComplex& c) {
  Int e = -1;  // empty face in degree -1
  for (int d = 0; d <= c.top_dimension(); ++d)
    e += (d % 2 == 0 ? Int(1) : Int(-1)) * Int(c.faces_of_dimension(d).size());
  return e;
}

void check_sphere_profile(const HomologyProfile& prof, int n) {
  for (int q = -1; q <= prof.max_degree(); ++q)
    CHECK(prof.rank(q) == (q == n - 1 ? 1 : 0));
}

}  // namespace

TEST_CASE("support complexes from sign patterns") {
  Fan v2 = build_del_pezzo_fan(2);

  SUBCASE("all negative gives the void complex") {
    SupportComplex c = support_complex(v2, SignPattern(6, {}));
    CHECK(c.top_dimension() == -1);
    CHECK(c.face_count() == 0);
  }
  SUBCASE("all nonneg gives the full nerve, a hexagon") {
    SupportComplex c = support_complex(v2, SignPattern(6, {0, 1, 2, 3, 4, 5}));
    CHECK(c.faces_of_dimension(0).size() == 6);
    CHECK(c.faces_of_dimension(1).size() == 6);
    CHECK(c.top_dimension() == 1);
  }
  SUBCASE("deleting the first column leaves two disjoint edges") {
    SupportComplex c = support_complex(v2, SignPattern::from_negative(6, {0, 3}));
    CHECK(c.faces_of_dimension(0).size() == 4);
    CHECK(c.faces_of_dimension(1) == std::vector<std::vector<int>>{{1, 5}, {2, 4}});
    CHECK(c.maximal_faces() == std::vector<std::vector<int>>{{1, 5}, {2, 4}});
  }
  SUBCASE("pattern depends on signs only") {
    std::vector<Int> a{Int(0), Int(3), Int(-1), Int(7), Int(-2), Int(1)};
    std::vector<Int> b{Int(5), Int(0), Int(-9), Int(2), Int(-1), Int(0)};
    SupportComplex ca = support_complex(v2, SignPattern::from_divisor(a));
    SupportComplex cb = support_complex(v2, SignPattern::from_divisor(b));
    CHECK(all_faces(ca) == all_faces(cb));
  }
  SUBCASE("monotone in the nonneg set") {
    Rng rng(31);
    Fan v4 = build_del_pezzo_fan(4);
    for (int trial = 0; trial < 40; ++trial) {
      std::uint64_t small = static_cast<std::uint64_t>(rng.uniform(0, 1023));
      std::uint64_t big = small | static_cast<std::uint64_t>(rng.uniform(0, 1023));
      SupportComplex cs = support_complex(v4, SignPattern::from_mask(10, small));
      SupportComplex cb = support_complex(v4, SignPattern::from_mask(10, big));
      for (const auto& f : all_faces(cs)) CHECK(cb.has_face(f));
    }
  }
}

TEST_CASE("reduced homology of basic complexes") {
  Fan v2 = build_del_pezzo_fan(2);

  SUBCASE("void complex has rank 1 in degree -1") {
    HomologyProfile prof = reduced_homology(support_complex(v2, SignPattern(6, {})));
    CHECK(prof.rank(-1) == 1);
    CHECK(prof.max_degree() == -1);
  }
  SUBCASE("two isolated vertices form a 0-sphere") {
    // rays 2 and 5 sit in the same table column, so they never share a cone
    SupportComplex c = support_complex(v2, SignPattern(6, {2, 5}));
    CHECK(c.top_dimension() == 0);
    HomologyProfile prof = reduced_homology(c);
    CHECK(prof.rank(-1) == 0);
    CHECK(prof.rank(0) == 1);
  }
  SUBCASE("the hexagon is a circle") {
    HomologyProfile prof = reduced_homology(support_complex(v2, SignPattern(6, {0, 1, 2, 3, 4, 5})));
    CHECK(prof.rank(-1) == 0);
    CHECK(prof.rank(0) == 0);
    CHECK(prof.rank(1) == 1);
    HomologyProfile mod2 =
        reduced_homology(support_complex(v2, SignPattern(6, {0, 1, 2, 3, 4, 5})), CoefficientRing::Mod2);
    CHECK(mod2.rank(1) == 1);
  }
}

TEST_CASE("the full nerve of every built fan is a homology sphere") {
  for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3)}) {
    Fan f = build_projective_fan(n);
    SignPattern all(f.ray_count(), [&] {
      std::vector<int> v;
      for (std::size_t i = 0; i < f.ray_count(); ++i) v.push_back(static_cast<int>(i));
      return v;
    }());
    HomologyProfile prof = reduced_homology(support_complex(f, all));
    check_sphere_profile(prof, static_cast<int>(n));
    CHECK(prof.reduced_euler() == (n % 2 == 1 ? 1 : -1));
  }
  for (std::size_t n : {std::size_t(2), std::size_t(4)}) {
    Fan f = build_del_pezzo_fan(n);
    std::vector<int> v;
    for (std::size_t i = 0; i < f.ray_count(); ++i) v.push_back(static_cast<int>(i));
    HomologyProfile prof = reduced_homology(support_complex(f, SignPattern(f.ray_count(), v)));
    check_sphere_profile(prof, static_cast<int>(n));
  }
}

TEST_CASE("euler consistency and coefficient agreement on random patterns") {
  Rng rng(77);
  Fan v4 = build_del_pezzo_fan(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t mask = static_cast<std::uint64_t>(rng.uniform(0, 1023));
    SupportComplex c = support_complex(v4, SignPattern::from_mask(10, mask));
    HomologyProfile rat = reduced_homology(c, CoefficientRing::Rational);
    HomologyProfile integral = reduced_homology(c, CoefficientRing::Integer);
    CHECK(rat.reduced_euler() == face_euler(c));
    for (int q = -1; q <= rat.max_degree(); ++q) {
      CHECK(rat.rank(q) == integral.rank(q));
      CHECK(integral.torsion(q).empty());  // these nerves carry no torsion
    }
  }
}

TEST_CASE("cycle criterion") {
  Fan v2 = build_del_pezzo_fan(2);
  SUBCASE("hexagon holds at d = 1 with every vertex in two edges") {
    SupportComplex c = support_complex(v2, SignPattern(6, {0, 1, 2, 3, 4, 5}));
    CycleCheck chk = cycle_criterion(c, 1);
    CHECK(chk.holds);
    CHECK(chk.incidence.size() == 6);
    for (const auto& [face, count] : chk.incidence) CHECK(count == 2);
  }
  SUBCASE("a single edge fails") {
    SupportComplex c = support_complex(v2, SignPattern(6, {0, 5}));
    REQUIRE(c.faces_of_dimension(1).size() == 1);
    CycleCheck chk = cycle_criterion(c, 1);
    CHECK(!chk.holds);
    for (const auto& [face, count] : chk.incidence) CHECK(count == 1);
  }
  SUBCASE("the deleted-column complex fails with all incidences 1") {
    SupportComplex c = support_complex(v2, SignPattern::from_negative(6, {0, 3}));
    CycleCheck chk = cycle_criterion(c, 1);
    CHECK(!chk.holds);
    CHECK(chk.incidence.size() == 4);
    for (const auto& [face, count] : chk.incidence) CHECK(count == 1);
  }
  SUBCASE("no d-faces means no cycle") {
    SupportComplex c = support_complex(v2, SignPattern(6, {0}));
    CHECK(!cycle_criterion(c, 1).holds);
  }
  SUBCASE("d must be positive") {
    SupportComplex c = support_complex(v2, SignPattern(6, {0}));
    CHECK_THROWS_AS(cycle_criterion(c, 0), DomainError);
  }
}
