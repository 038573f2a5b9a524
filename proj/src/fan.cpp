#include "toricoh/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toricoh/int_matrix.hpp"
#include "toricoh/smith.hpp"

namespace toricoh {

namespace {

std::string cone_label(const std::vector<int>& cone) {
  std::ostringstream os;
  os << "<";
  for (std::size_t k = 0; k < cone.size(); ++k) {
    if (k) os << ",";
    os << cone[k] + 1;  // 1-based in diagnostics
  }
  os << ">";
  return os.str();
}

IntMatrix ray_matrix(const std::vector<std::vector<Int>>& rays, const std::vector<int>& idxs) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(idxs.size());
  for (int i : idxs) rows.push_back(rays[static_cast<std::size_t>(i)]);
  return IntMatrix::from_rows(rows);
}

}  // namespace

Fan::Fan(std::size_t dimension, std::vector<std::vector<Int>> rays,
         std::vector<std::vector<int>> max_cones, FanFamily family, std::size_t family_n)
    : dimension_(dimension),
      rays_(std::move(rays)),
      max_cones_(std::move(max_cones)),
      family_(family),
      family_n_(family_n) {
  for (auto& c : max_cones_) std::sort(c.begin(), c.end());
  check_structure();
  build_face_closure();
  if (ray_count() <= 64) {
    for (const auto& c : max_cones_) {
      std::uint64_t m = 0;
      for (int i : c) m |= std::uint64_t(1) << i;
      max_cone_masks_.push_back(m);
    }
  }
  run_validation();
}

void Fan::check_structure() const {
  if (dimension_ == 0) throw DomainError("fan dimension must be at least 1");
  if (dimension_ > 60) throw DomainError("fan dimension above the supported limit of 60");
  if (rays_.empty()) throw DomainError("fan has no rays");
  std::set<std::vector<Int>> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& v = rays_[i];
    if (v.size() != dimension_) throw DomainError("ray " + std::to_string(i + 1) + " has wrong dimension");
    Int g = 0;
    for (const Int& e : v) g = gcd_of(g, e);
    if (g == 0) throw DomainError("ray " + std::to_string(i + 1) + " is the zero vector");
    if (g != 1) throw DomainError("ray " + std::to_string(i + 1) + " is not primitive");
    if (!seen.insert(v).second) throw DomainError("duplicate ray at position " + std::to_string(i + 1));
  }
  if (max_cones_.empty()) throw DomainError("fan has no maximal cones");
  std::set<std::vector<int>> cone_seen;
  for (const auto& c : max_cones_) {
    if (c.empty()) throw DomainError("empty maximal cone");
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || static_cast<std::size_t>(c[k]) >= rays_.size())
        throw DomainError("cone ray index out of range in " + cone_label(c));
      if (k > 0 && c[k] == c[k - 1]) throw DomainError("repeated ray index in cone " + cone_label(c));
    }
    if (c.size() > dimension_) throw DomainError("cone " + cone_label(c) + " has too many rays");
    if (rank_of(ray_matrix(rays_, c)) != c.size())
      throw DomainError("cone " + cone_label(c) + " is not simplicial (rays dependent)");
    if (!cone_seen.insert(c).second) throw DomainError("duplicate maximal cone " + cone_label(c));
  }
}

void Fan::build_face_closure() {
  std::vector<std::set<std::vector<int>>> acc(dimension_ + 1);
  acc[0].insert({});
  for (const auto& c : max_cones_) {
    const std::size_t n = c.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << n); ++sub) {
      std::vector<int> face;
      for (std::size_t k = 0; k < n; ++k)
        if (sub & (std::uint64_t(1) << k)) face.push_back(c[k]);
      acc[face.size()].insert(std::move(face));
    }
  }
  faces_by_dim_.resize(dimension_ + 1);
  for (std::size_t m = 0; m <= dimension_; ++m)
    faces_by_dim_[m].assign(acc[m].begin(), acc[m].end());
}

const std::vector<std::vector<int>>& Fan::cones_of_dimension(std::size_t m) const {
  if (m > dimension_) throw DomainError("cone dimension out of range");
  return faces_by_dim_[m];
}

bool Fan::spans_cone(const std::vector<int>& sorted_idxs) const {
  if (!max_cone_masks_.empty()) {
    std::uint64_t m = 0;
    for (int i : sorted_idxs) m |= std::uint64_t(1) << i;
    for (std::uint64_t c : max_cone_masks_)
      if ((m & c) == m) return true;
    return false;
  }
  for (const auto& c : max_cones_)
    if (std::includes(c.begin(), c.end(), sorted_idxs.begin(), sorted_idxs.end())) return true;
  return false;
}

void Fan::run_validation() {
  ValidationReport rep;
  rep.smooth = true;
  for (const auto& c : max_cones_) {
    SmithDecomposition s = smith_normal_form(ray_matrix(rays_, c));
    bool ok = true;
    for (const Int& d : s.diag) ok = ok && d == 1;
    if (!ok) {
      rep.smooth = false;
      rep.diagnostics.push_back("cone " + cone_label(c) + " is singular (rays do not extend to a lattice basis)");
    }
  }

  rep.complete = true;
  for (const auto& c : max_cones_)
    if (c.size() != dimension_) {
      rep.complete = false;
      rep.diagnostics.push_back("maximal cone " + cone_label(c) + " is not full dimensional");
    }
  // Pseudomanifold test: every facet in exactly two maximal cones, and the
  // facet adjacency graph connected.
  std::map<std::vector<int>, std::vector<std::size_t>> facet_owners;
  for (std::size_t ci = 0; ci < max_cones_.size(); ++ci) {
    const auto& c = max_cones_[ci];
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<int> facet;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != drop) facet.push_back(c[k]);
      facet_owners[facet].push_back(ci);
    }
  }
  for (const auto& [facet, owners] : facet_owners)
    if (owners.size() != 2) {
      rep.complete = false;
      rep.diagnostics.push_back("facet " + cone_label(facet) + " lies in " +
                                std::to_string(owners.size()) + " maximal cones (want 2)");
    }
  if (rep.complete && max_cones_.size() > 1) {
    std::vector<char> seen(max_cones_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const auto& [facet, owners] : facet_owners)
      if (owners.size() == 2) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
      }
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++visited;
          stack.push_back(y);
        }
    }
    if (visited != max_cones_.size()) {
      rep.complete = false;
      rep.diagnostics.push_back("maximal cone adjacency graph is disconnected");
    }
  }
  validation_ = std::move(rep);
}

Fan build_projective_fan(std::size_t n) {
  if (n < 1) throw DomainError("projective fan requires n >= 1");
  std::vector<std::vector<Int>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(std::vector<Int>(n, Int(-1)));
  std::vector<std::vector<int>> cones;
  for (std::size_t omit = 0; omit <= n; ++omit) {
    std::vector<int> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != omit) c.push_back(static_cast<int>(i));
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones), FanFamily::Projective, n);
}

Fan build_del_pezzo_fan(std::size_t n) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("del Pezzo fan is defined for even dimension n = 2r; got n = " +
                      std::to_string(n));
  const std::size_t r = n / 2;
  const std::size_t cols = n + 1;
  std::vector<std::vector<Int>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(std::vector<Int>(n, Int(-1)));  // v_{n+1}
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Int> neg(n);
    for (std::size_t j = 0; j < n; ++j) neg[j] = -rays[i][j];
    rays.push_back(std::move(neg));  // v_{n+1+i+1}
  }

  // Columns 1..n+1 of the 2 x (n+1) table: x_c = ray c-1, y_c = ray n+c.
  std::vector<std::vector<int>> subsets;  // r-subsets of {0..n}
  std::vector<int> cur;
  auto gen = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < cols; ++i) {
      cur.push_back(static_cast<int>(i));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  gen(gen, 0);

  std::vector<std::vector<int>> cones;
  for (const auto& I : subsets)
    for (const auto& J : subsets) {
      bool disjoint = true;
      for (int a : I)
        for (int b : J) disjoint = disjoint && a != b;
      if (!disjoint) continue;
      std::vector<int> c;
      for (int a : I) c.push_back(a);
      for (int b : J) c.push_back(b + static_cast<int>(cols));
      std::sort(c.begin(), c.end());
      cones.push_back(std::move(c));
    }
  return Fan(n, std::move(rays), std::move(cones), FanFamily::DelPezzo, n);
}

SymmetryReport symmetry_report(const Fan& fan) {
  SymmetryReport rep;
  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) index.emplace(fan.ray(i), i);
  std::set<std::size_t> paired;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    std::vector<Int> neg(fan.dimension());
    for (std::size_t k = 0; k < fan.dimension(); ++k) neg[k] = -fan.ray(i)[k];
    auto it = index.find(neg);
    if (it == index.end()) continue;
    paired.insert(i);
    paired.insert(it->second);
    if (i < it->second) ++rep.pairs;
  }
  if (!paired.empty()) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i : paired) rows.push_back(fan.ray(i));
    rep.order = rank_of(IntMatrix::from_rows(rows));
  }
  rep.hypothesis_met = rep.pairs >= rep.order + 1;
  return rep;
}

std::vector<Int> canonical_divisor(const Fan& fan) {
  return std::vector<Int>(fan.ray_count(), Int(-1));
}

}  // namespace toricoh
