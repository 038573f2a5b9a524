#include "toricoh/homology.hpp"

#include <algorithm>
#include <map>

#include "toricoh/int_matrix.hpp"
#include "toricoh/smith.hpp"

namespace toricoh {

const Int& HomologyProfile::rank(int q) const {
  static const Int kZero = 0;
  if (q < -1 || q > top_) return kZero;
  return ranks_[static_cast<std::size_t>(q + 1)];
}

const std::vector<Int>& HomologyProfile::torsion(int q) const {
  static const std::vector<Int> kNone;
  if (q < -1 || q > top_) return kNone;
  return torsion_[static_cast<std::size_t>(q + 1)];
}

bool HomologyProfile::all_zero() const {
  for (const Int& r : ranks_)
    if (r != 0) return false;
  for (const auto& t : torsion_)
    if (!t.empty()) return false;
  return true;
}

Int HomologyProfile::reduced_euler() const {
  Int e = 0;
  for (int q = -1; q <= top_; ++q)
    e += (q % 2 == 0 ? rank(q) : -rank(q));
  return e;
}

namespace {

// d_q : C_q -> C_{q-1}; C_{-1} is spanned by the empty face.
IntMatrix boundary_matrix(const SupportComplex& c, int q) {
  const auto& domain = c.faces_of_dimension(q);
  if (q == 0) {
    IntMatrix b(1, domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) b.at(0, j) = 1;
    return b;
  }
  const auto& codomain = c.faces_of_dimension(q - 1);
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t i = 0; i < codomain.size(); ++i) row_of.emplace(codomain[i], i);
  IntMatrix b(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const auto& face = domain[j];
    int sign = 1;
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(face.size() - 1);
      for (std::size_t k = 0; k < face.size(); ++k)
        if (k != drop) sub.push_back(face[k]);
      b.at(row_of.at(sub), j) = sign;
      sign = -sign;
    }
  }
  return b;
}

std::size_t rank_mod2(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<char>> a(rows, std::vector<char>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<char>(abs_of(m.at(i, j)) % 2 != 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j < cols; ++j) a[i][j] = static_cast<char>(a[i][j] ^ a[r][j]);
    ++r;
  }
  return r;
}

}  // namespace

HomologyProfile reduced_homology(const SupportComplex& c, CoefficientRing ring) {
  const int top = c.top_dimension();
  HomologyProfile prof(top, ring);

  // chain ranks: C_{-1} = 1 (the empty face), then face counts
  std::vector<Int> chain(static_cast<std::size_t>(top + 2));
  chain[0] = 1;
  for (int q = 0; q <= top; ++q)
    chain[static_cast<std::size_t>(q + 1)] = c.faces_of_dimension(q).size();

  // boundary ranks; d_{-1} and d_{top+1} are zero maps
  std::vector<Int> brank(static_cast<std::size_t>(top + 3));
  std::vector<std::vector<Int>> btorsion(static_cast<std::size_t>(top + 3));
  for (int q = 0; q <= top; ++q) {
    IntMatrix b = boundary_matrix(c, q);
    if (ring == CoefficientRing::Mod2) {
      brank[static_cast<std::size_t>(q + 1)] = rank_mod2(b);
    } else if (ring == CoefficientRing::Rational) {
      brank[static_cast<std::size_t>(q + 1)] = rank_of(b);
    } else {
      SmithDecomposition s = smith_normal_form(b);
      Int r = 0;
      for (const Int& d : s.diag)
        if (d != 0) {
          ++r;
          if (d > 1) btorsion[static_cast<std::size_t>(q + 1)].push_back(d);
        }
      brank[static_cast<std::size_t>(q + 1)] = r;
    }
  }

  for (int q = -1; q <= top; ++q) {
    std::size_t idx = static_cast<std::size_t>(q + 1);
    prof.rank_ref(q) = chain[idx] - brank[idx] - brank[idx + 1];
    if (ring == CoefficientRing::Integer) prof.torsion_ref(q) = btorsion[idx + 1];
  }
  return prof;
}

CycleCheck cycle_criterion(const SupportComplex& c, int d) {
  if (d < 1) throw DomainError("cycle criterion requires d >= 1");
  CycleCheck out;
  const auto& low = c.faces_of_dimension(d - 1);
  const auto& high = c.faces_of_dimension(d);
  out.d_face_count = high.size();
  std::map<std::vector<int>, std::size_t> counts;
  for (const auto& f : low) counts.emplace(f, 0);
  for (const auto& f : high) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(f.size() - 1);
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != drop) sub.push_back(f[k]);
      ++counts.at(sub);
    }
  }
  out.holds = !high.empty();
  for (const auto& [face, n] : counts) {
    if (n != 0 && n != 2) out.holds = false;
    out.incidence.emplace_back(face, n);
  }
  return out;
}

}  // namespace toricoh
