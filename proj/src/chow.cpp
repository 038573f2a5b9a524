#include "toricoh/chow.hpp"

#include <algorithm>

#include "toricoh/smith.hpp"

namespace toricoh {

bool ChowElement::is_zero() const {
  for (const auto& c : coords_)
    for (const Int& e : c)
      if (e != 0) return false;
  return true;
}

ChowElement ChowElement::operator+(const ChowElement& rhs) const {
  if (ring_ != rhs.ring_) throw DomainError("ring mismatch");
  ChowElement out = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k)
    for (std::size_t j = 0; j < coords_[k].size(); ++j) out.coords_[k][j] += rhs.coords_[k][j];
  return out;
}

ChowElement ChowElement::operator-(const ChowElement& rhs) const { return *this + (-rhs); }

ChowElement ChowElement::operator-() const { return scaled(Int(-1)); }

ChowElement ChowElement::scaled(const Int& c) const {
  ChowElement out = *this;
  for (auto& deg : out.coords_)
    for (Int& e : deg) e *= c;
  return out;
}

bool ChowElement::operator==(const ChowElement& rhs) const {
  return ring_ == rhs.ring_ && coords_ == rhs.coords_;
}

namespace {

std::vector<int> face_union(const std::vector<int>& f, int extra) {
  std::vector<int> out;
  out.reserve(f.size() + 1);
  bool placed = false;
  for (int v : f) {
    if (!placed && extra < v) {
      out.push_back(extra);
      placed = true;
    }
    out.push_back(v);
  }
  if (!placed) out.push_back(extra);
  return out;
}

}  // namespace

ChowRing::ChowRing(const Fan& fan) : fan_(fan), n_(fan.dimension()), picard_(fan_) {
  if (fan_.family() != FanFamily::DelPezzo)
    throw DomainError("the intersection ring presentation is built for del Pezzo fans only");
  faces_.resize(n_ + 1);
  face_index_.resize(n_ + 1);
  basis_.resize(n_ + 1);
  reduction_.resize(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) {
    faces_[k] = fan_.cones_of_dimension(k);
    for (std::size_t f = 0; f < faces_[k].size(); ++f) face_index_[k].emplace(faces_[k][f], f);
    build_degree(k);
  }
  if (degree_rank(0) != 1 || degree_rank(n_) != 1 || degree_rank(1) != picard_.rank())
    throw Error("intersection ring ranks disagree with the divisor class group");
  // Point class consistency: every maximal cone monomial must reduce to +1
  // times the chosen top basis monomial. A failure would mean the relation
  // set is incomplete, which is reported rather than patched.
  for (std::size_t f = 0; f < faces_[n_].size(); ++f)
    if (reduction_[n_][f] != std::vector<Int>{Int(1)})
      throw Error("maximal cone classes are not identified; relation set incomplete");
}

void ChowRing::build_degree(std::size_t k) {
  const std::size_t nfaces = faces_[k].size();

  // Relations: for each (k-1)-face t and each lattice vector m orthogonal to
  // its rays, sum over rays g outside t of <m, v_g> [t + g].
  std::vector<std::vector<Int>> rel_rows;
  if (k >= 1) {
    for (const auto& tau : faces_[k - 1]) {
      IntMatrix vt = IntMatrix::from_rows([&] {
        std::vector<std::vector<Int>> rows;
        for (int i : tau) rows.push_back(fan_.ray(static_cast<std::size_t>(i)));
        return rows;
      }());
      IntMatrix kernel = tau.empty() ? IntMatrix::identity(n_) : integer_kernel_basis(vt);
      for (std::size_t c = 0; c < kernel.cols(); ++c) {
        std::vector<Int> m = kernel.col(c);
        std::vector<Int> row(nfaces);
        bool nonzero = false;
        for (std::size_t g = 0; g < fan_.ray_count(); ++g) {
          if (std::binary_search(tau.begin(), tau.end(), static_cast<int>(g))) continue;
          Int val = 0;
          const auto& vg = fan_.ray(g);
          for (std::size_t j = 0; j < n_; ++j) val += m[j] * vg[j];
          if (val == 0) continue;
          auto it = face_index_[k].find(face_union(tau, static_cast<int>(g)));
          if (it == face_index_[k].end()) continue;
          row[it->second] += val;
          nonzero = nonzero || row[it->second] != 0;
        }
        if (nonzero) rel_rows.push_back(std::move(row));
      }
    }
  }

  // Reduce the relation set to a lattice basis of its row span.
  std::size_t rel_rank = 0;
  if (!rel_rows.empty()) {
    IntMatrix r = IntMatrix::from_rows(rel_rows);
    SmithDecomposition s = smith_normal_form(r);
    IntMatrix winv = unimodular_inverse(s.right);
    rel_rows.clear();
    for (std::size_t t = 0; t < s.diag.size(); ++t) {
      if (s.diag[t] == 0) break;
      std::vector<Int> row = winv.row(t);
      for (Int& e : row) e *= s.diag[t];
      rel_rows.push_back(std::move(row));
    }
    rel_rank = rel_rows.size();
  }
  const std::size_t quotient_rank = nfaces - rel_rank;

  {
    CokernelPresentation coker(rel_rows.empty() ? IntMatrix(nfaces, 0)
                                                : IntMatrix::from_rows(rel_rows).transposed());
    if (!coker.torsion().empty())
      throw Error("torsion in intersection ring degree " + std::to_string(k));
    if (coker.free_rank() != quotient_rank)
      throw Error("rank bookkeeping mismatch in degree " + std::to_string(k));
  }

  // Greedy monomial basis: keep a face when the relations plus the chosen
  // unit vectors still form a primitive sublattice of full expected rank.
  std::vector<std::size_t>& basis = basis_[k];
  for (std::size_t f = 0; f < nfaces && basis.size() < quotient_rank; ++f) {
    std::vector<std::vector<Int>> stacked = rel_rows;
    for (std::size_t b : basis) {
      std::vector<Int> unit(nfaces);
      unit[b] = 1;
      stacked.push_back(std::move(unit));
    }
    std::vector<Int> unit(nfaces);
    unit[f] = 1;
    stacked.push_back(std::move(unit));
    SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(stacked));
    std::size_t nnz = 0;
    bool all_one = true;
    for (const Int& d : s.diag)
      if (d != 0) {
        ++nnz;
        all_one = all_one && d == 1;
      }
    if (all_one && nnz == rel_rank + basis.size() + 1) basis.push_back(f);
  }
  if (basis.size() != quotient_rank)
    throw Error("no square-free monomial basis found in degree " + std::to_string(k));

  // Reduction table: solve e_f = (relation combo) + (basis combo) and keep
  // the basis coordinates, unique because the two spans are complementary.
  IntMatrix sys(nfaces, rel_rank + quotient_rank);
  for (std::size_t r = 0; r < rel_rank; ++r)
    for (std::size_t i = 0; i < nfaces; ++i) sys.at(i, r) = rel_rows[r][i];
  for (std::size_t b = 0; b < quotient_rank; ++b) sys.at(basis[b], rel_rank + b) = 1;
  LinearSolver solver(sys);
  reduction_[k].resize(nfaces);
  for (std::size_t f = 0; f < nfaces; ++f) {
    std::vector<Int> e(nfaces);
    e[f] = 1;
    auto sol = solver.solve(e);
    if (!sol) throw Error("monomial reduction failed in degree " + std::to_string(k));
    reduction_[k][f].assign(sol->begin() + static_cast<std::ptrdiff_t>(rel_rank), sol->end());
  }
}

std::vector<std::vector<int>> ChowRing::basis_faces(std::size_t k) const {
  std::vector<std::vector<int>> out;
  for (std::size_t b : basis_[k]) out.push_back(faces_[k][b]);
  return out;
}

ChowElement ChowRing::zero() const {
  ChowElement e;
  e.ring_ = this;
  e.coords_.resize(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) e.coords_[k].assign(basis_[k].size(), Int(0));
  return e;
}

ChowElement ChowRing::one() const {
  ChowElement e = zero();
  e.coords_[0][0] = 1;
  return e;
}

ChowElement ChowRing::face_class(const std::vector<int>& sorted_face) const {
  const std::size_t k = sorted_face.size();
  if (k > n_) throw DomainError("face has more vertices than the fan dimension");
  auto it = face_index_[k].find(sorted_face);
  if (it == face_index_[k].end()) throw DomainError("vertex set does not span a cone");
  ChowElement e = zero();
  e.coords_[k] = reduction_[k][it->second];
  return e;
}

ChowElement ChowRing::divisor_class(const std::vector<Int>& divisor) const {
  if (divisor.size() != fan_.ray_count())
    throw DomainError("divisor length does not match ray count");
  ChowElement e = zero();
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    if (divisor[i] == 0) continue;
    const auto& red = reduction_[1][face_index_[1].at({static_cast<int>(i)})];
    for (std::size_t j = 0; j < red.size(); ++j) e.coords_[1][j] += divisor[i] * red[j];
  }
  return e;
}

ChowElement ChowRing::class_element(const std::vector<Int>& pic_coords) const {
  return divisor_class(picard_.representative(pic_coords));
}

std::map<std::vector<int>, Int> ChowRing::expand_face_product(const std::vector<int>& a,
                                                              const std::vector<int>& b) const {
  std::map<std::vector<int>, Int> cur;
  cur.emplace(a, Int(1));
  for (int v : b) {
    std::map<std::vector<int>, Int> next;
    for (const auto& [face, coeff] : cur) {
      if (!std::binary_search(face.begin(), face.end(), v)) {
        std::vector<int> bigger = face_union(face, v);
        if (fan_.spans_cone(bigger)) next[bigger] += coeff;
        continue;
      }
      // E_v * E_face with v already in the face: rewrite E_v through a dual
      // vector m with <m, v_l> = delta_{lv} on the face's rays, killing the
      // square.
      std::vector<std::vector<Int>> rows;
      std::vector<Int> rhs;
      for (int l : face) {
        rows.push_back(fan_.ray(static_cast<std::size_t>(l)));
        rhs.emplace_back(l == v ? 1 : 0);
      }
      auto m = solve_integer(IntMatrix::from_rows(rows), rhs);
      if (!m) throw Error("smooth cone has no dual vector; fan data inconsistent");
      for (std::size_t g = 0; g < fan_.ray_count(); ++g) {
        if (std::binary_search(face.begin(), face.end(), static_cast<int>(g))) continue;
        Int val = 0;
        const auto& vg = fan_.ray(g);
        for (std::size_t j = 0; j < n_; ++j) val += (*m)[j] * vg[j];
        if (val == 0) continue;
        std::vector<int> bigger = face_union(face, static_cast<int>(g));
        if (fan_.spans_cone(bigger)) next[bigger] -= coeff * val;
      }
    }
    // drop zeros
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> ChowRing::reduce_combination(std::size_t k,
                                              const std::map<std::vector<int>, Int>& combo) const {
  std::vector<Int> out(basis_[k].size(), Int(0));
  for (const auto& [face, coeff] : combo) {
    const auto& red = reduction_[k][face_index_[k].at(face)];
    for (std::size_t j = 0; j < red.size(); ++j) out[j] += coeff * red[j];
  }
  return out;
}

const std::vector<Int>& ChowRing::basis_product(std::size_t p, std::size_t ai, std::size_t q,
                                                std::size_t bi) const {
  if (p > q) return basis_product(q, bi, p, ai);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto key = std::make_tuple(p, ai, q, bi);
  auto it = product_memo_.find(key);
  if (it != product_memo_.end()) return it->second;
  const auto& fa = faces_[p][basis_[p][ai]];
  const auto& fb = faces_[q][basis_[q][bi]];
  auto combo = expand_face_product(fa, fb);
  return product_memo_.emplace(key, reduce_combination(p + q, combo)).first->second;
}

ChowElement ChowRing::multiply(const ChowElement& a, const ChowElement& b) const {
  if (a.ring_ != this || b.ring_ != this) throw DomainError("ring mismatch");
  ChowElement out = zero();
  for (std::size_t p = 0; p <= n_; ++p)
    for (std::size_t ai = 0; ai < a.coords_[p].size(); ++ai) {
      if (a.coords_[p][ai] == 0) continue;
      for (std::size_t q = 0; p + q <= n_; ++q)
        for (std::size_t bi = 0; bi < b.coords_[q].size(); ++bi) {
          if (b.coords_[q][bi] == 0) continue;
          const Int c = a.coords_[p][ai] * b.coords_[q][bi];
          const auto& prod = basis_product(p, ai, q, bi);
          for (std::size_t j = 0; j < prod.size(); ++j) out.coords_[p + q][j] += c * prod[j];
        }
    }
  return out;
}

Int ChowRing::top_coordinate(const ChowElement& e) const {
  if (e.ring_ != this) throw DomainError("ring mismatch");
  return e.degree(n_)[0];
}

IntMatrix ChowRing::degree_one_intersection_matrix() const {
  if (n_ != 2) throw DomainError("the degree-1 Gram matrix is a surface computation");
  const std::size_t r = basis_[1].size();
  IntMatrix g(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) g.at(a, b) = basis_product(1, a, 1, b)[0];
  return g;
}

ChowRing build_chow(const Fan& fan) { return ChowRing(fan); }

std::pair<ChowElement, ChowElement> chern_pair(const ChowRing& ring,
                                               const std::vector<Int>& x1_coords,
                                               const std::vector<Int>& x2_coords) {
  ChowElement x1 = ring.class_element(x1_coords);
  ChowElement x2 = ring.class_element(x2_coords);
  return {x1 + x2, ring.multiply(x1, x2)};
}

std::vector<std::vector<Int>> splitting_candidates(const ChowRing& ring,
                                                   const std::vector<Int>& d1_coords,
                                                   const Int& box) {
  if (box < 0) throw DomainError("search box must be nonnegative");
  const std::size_t rank = ring.picard().rank();
  std::vector<Int> neg(d1_coords.size());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -d1_coords[j];
  auto [c1, c2] = chern_pair(ring, d1_coords, neg);

  std::vector<std::vector<Int>> found;
  std::vector<Int> x(rank, -box);
  while (true) {
    ChowElement x2 = ring.class_element(x);
    ChowElement x1 = c1 - x2;
    if (ring.multiply(x1, x2) == c2) found.push_back(x);
    std::size_t pos = rank;
    bool rolled = true;
    while (pos > 0) {
      --pos;
      if (x[pos] < box) {
        ++x[pos];
        for (std::size_t j = pos + 1; j < rank; ++j) x[j] = -box;
        rolled = false;
        break;
      }
    }
    if (rolled) break;
  }
  // d1 and -d1 satisfy the constraints by construction; keep them even when
  // the box misses them.
  found.push_back(d1_coords);
  found.push_back(neg);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

Int riemann_roch_chi(const ChowRing& ring, const std::vector<Int>& class_coords) {
  if (ring.dimension() != 2) throw DomainError("this Euler characteristic formula is for surfaces");
  ChowElement d = ring.class_element(class_coords);
  ChowElement anti_k = ring.divisor_class(std::vector<Int>(ring.fan().ray_count(), Int(1)));
  Int self = ring.top_coordinate(ring.multiply(d, d));
  Int mixed = ring.top_coordinate(ring.multiply(d, anti_k));
  if ((self + mixed) % 2 != 0)
    throw Error("parity violation in the Euler characteristic pairing");
  return 1 + (self + mixed) / 2;
}

}  // namespace toricoh
