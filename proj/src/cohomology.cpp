#include "toricoh/cohomology.hpp"

#include <algorithm>

#include "toricoh/int_matrix.hpp"

namespace toricoh {

PicardPresentation::PicardPresentation(const Fan& fan)
    : ray_count_(fan.ray_count()),
      coker_([&] {
        if (!fan.is_verified())
          throw DomainError("divisor class computations need a smooth complete fan");
        return CokernelPresentation(IntMatrix::from_rows(fan.rays()));
      }()) {
  if (!coker_.torsion().empty())
    throw Error("unexpected torsion in the divisor class group of a smooth complete fan");
  rank_ = coker_.free_rank();
  if (rank_ != fan.ray_count() - fan.dimension())
    throw Error("divisor class rank mismatch; fan rays do not span the lattice");
  for (std::size_t j = 0; j < rank_; ++j) basis_.push_back(coker_.lift_free(j));
}

std::vector<Int> PicardPresentation::class_of(const std::vector<Int>& divisor) const {
  if (divisor.size() != ray_count_) throw DomainError("divisor length does not match ray count");
  return coker_.free_part(divisor);
}

bool PicardPresentation::is_principal(const std::vector<Int>& divisor) const {
  for (const Int& c : class_of(divisor))
    if (c != 0) return false;
  return true;
}

std::vector<Int> PicardPresentation::representative(const std::vector<Int>& coords) const {
  if (coords.size() != rank_) throw DomainError("class coordinate length does not match rank");
  std::vector<Int> d(ray_count_);
  for (std::size_t j = 0; j < rank_; ++j)
    if (coords[j] != 0)
      for (std::size_t i = 0; i < ray_count_; ++i) d[i] += coords[j] * basis_[j][i];
  return d;
}

CohomologyEngine::CohomologyEngine(Fan fan, std::size_t max_rays)
    : fan_(std::move(fan)), max_rays_(max_rays), picard_(fan_) {}

const HomologyProfile& CohomologyEngine::pattern_profile(std::uint64_t mask) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = profile_cache_.find(mask);
  if (it != profile_cache_.end()) return it->second;
  SupportComplex c = support_complex(fan_, SignPattern::from_mask(fan_.ray_count(), mask));
  return profile_cache_.emplace(mask, reduced_homology(c, CoefficientRing::Rational))
      .first->second;
}

RationalPolyhedron CohomologyEngine::chamber(const std::vector<Int>& d, std::uint64_t mask) const {
  // Points m of the dual lattice with d_i + <m, v_i> >= 0 exactly on the
  // pattern's nonneg rays; the strict side is already in closed form.
  RationalPolyhedron p;
  p.dimension = fan_.dimension();
  for (std::size_t i = 0; i < fan_.ray_count(); ++i) {
    Constraint c;
    c.normal = fan_.ray(i);
    if (mask & (std::uint64_t(1) << i)) {
      c.sense = Sense::GreaterEq;
      c.bound = -d[i];
    } else {
      c.sense = Sense::LessEq;
      c.bound = -d[i] - 1;
    }
    p.constraints.push_back(std::move(c));
  }
  return p;
}

CohomologyTable CohomologyEngine::cohomology(const std::vector<Int>& divisor) const {
  if (!fan_.is_verified())
    throw DomainError("cohomology requires a smooth complete fan");
  if (divisor.size() != fan_.ray_count())
    throw DomainError("divisor length does not match ray count");
  if (fan_.ray_count() > max_rays_)
    throw DomainError("pattern sweep over 2^" + std::to_string(fan_.ray_count()) +
                      " sign patterns exceeds the cap of " + std::to_string(max_rays_) +
                      " rays (TORICOH_MAX_RAYS)");

  const std::size_t n = fan_.dimension();
  CohomologyTable table;
  table.h.assign(n + 1, Int(0));
  const std::uint64_t limit = std::uint64_t(1) << fan_.ray_count();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const HomologyProfile& prof = pattern_profile(mask);
    if (prof.all_zero()) continue;

    LatticePointResult pts = lattice_points(chamber(divisor, mask));
    if (pts.kind == Feasibility::Unbounded)
      throw UnboundedChamberError("sign chamber with nonzero homology is unbounded");
    Int count = static_cast<std::uint64_t>(pts.points.size());

    PatternAudit audit;
    audit.nonneg_mask = mask;
    audit.negative = SignPattern::from_mask(fan_.ray_count(), mask).negative();
    audit.points = count;
    for (int q = -1; q <= prof.max_degree(); ++q) {
      const Int& rk = prof.rank(q);
      if (rk == 0) continue;
      audit.degree_ranks.emplace_back(q, rk);
      // degree q homology feeds h^{n-1-q}; q ranges over [-1, n-1]
      const std::size_t p = static_cast<std::size_t>(static_cast<int>(n) - 1 - q);
      table.h[p] += rk * count;
    }
    table.audit.push_back(std::move(audit));
  }

  table.euler = 0;
  for (std::size_t p = 0; p <= n; ++p)
    table.euler += (p % 2 == 0 ? table.h[p] : -table.h[p]);
  return table;
}

Int CohomologyEngine::ext_dimension(const std::vector<Int>& l1, const std::vector<Int>& l2) const {
  if (l1.size() != fan_.ray_count() || l2.size() != fan_.ray_count())
    throw DomainError("divisor length does not match ray count");
  std::vector<Int> d(fan_.ray_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = l1[i] - l2[i];
  return cohomology(d).h[1];
}

std::vector<H1Class> CohomologyEngine::search_h1(const Int& box) const {
  if (box < 1) throw DomainError("search box must be at least 1");
  const std::size_t k = fan_.ray_count();

  // Representatives grouped by class; lexicographic iteration makes the
  // first representative seen the smallest.
  std::map<std::vector<Int>, std::vector<Int>> reps;
  std::vector<Int> r(k, -box);
  while (true) {
    reps.try_emplace(picard_.class_of(r), r);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (r[pos] < box) {
        ++r[pos];
        for (std::size_t j = pos + 1; j < k; ++j) r[j] = -box;
        break;
      }
      if (pos == 0) {
        pos = k + 1;  // done
        break;
      }
    }
    if (pos == k + 1 || k == 0) break;
  }

  std::vector<H1Class> out;
  for (auto& [cls, rep] : reps) {
    Int h1 = cohomology(rep).h[1];
    if (h1 != 0) out.push_back(H1Class{cls, rep, h1});
  }
  std::sort(out.begin(), out.end(),
            [](const H1Class& a, const H1Class& b) { return a.representative < b.representative; });
  return out;
}

std::vector<Int> prop43_divisor(const Fan& fan, std::size_t i, const std::vector<Int>& coeffs) {
  if (fan.family() != FanFamily::DelPezzo)
    throw DomainError("this divisor shape is defined on del Pezzo fans only");
  const std::size_t n = fan.dimension();
  if (i < 1 || i > n + 1) throw DomainError("column index must lie in 1..n+1");
  if (coeffs.size() != 2 * n)
    throw DomainError("expected " + std::to_string(2 * n) + " coefficients");
  for (const Int& c : coeffs)
    if (c < 1) throw DomainError("coefficients must be positive");
  std::vector<Int> d(2 * n + 2);
  std::size_t next = 0;
  for (std::size_t pos = 1; pos <= 2 * n + 2; ++pos) {
    if (pos == i || pos == n + 1 + i) continue;
    d[pos - 1] = coeffs[next++];
  }
  return d;
}

std::vector<Int> prop43_uniform_divisor(const Fan& fan, std::size_t i, const Int& coeff) {
  return prop43_divisor(fan, i, std::vector<Int>(2 * fan.dimension(), coeff));
}

}  // namespace toricoh
