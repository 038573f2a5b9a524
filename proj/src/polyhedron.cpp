#include "toricoh/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace toricoh {

namespace {

// Internal row: a . x <= b.
struct Row {
  std::vector<Int> a;
  Int b;
};

bool all_zero(const std::vector<Int>& v) {
  for (const Int& e : v)
    if (e != 0) return false;
  return true;
}

// Divide by the gcd of the normal and floor the bound. Valid for integer
// points (it can cut off fractional sliver, never a lattice point).
void tighten(Row& r) {
  Int g = 0;
  for (const Int& e : r.a) g = gcd_of(g, e);
  if (g > 1) {
    for (Int& e : r.a) e /= g;
    r.b = floor_div(r.b, g);
  }
}

// Keep one row per normal, the tightest bound. Detects 0 <= b rows;
// returns false if one of them is infeasible.
bool compress(std::vector<Row>& rows) {
  std::map<std::vector<Int>, Int> best;
  for (Row& r : rows) {
    tighten(r);
    if (all_zero(r.a)) {
      if (r.b < 0) return false;
      continue;
    }
    auto it = best.find(r.a);
    if (it == best.end())
      best.emplace(r.a, r.b);
    else if (r.b < it->second)
      it->second = r.b;
  }
  rows.clear();
  for (auto& [a, b] : best) rows.push_back(Row{a, b});
  return true;
}

struct Stages {
  // stage[k] constrains x_0..x_{k-1} only; stage[dim] is the input system.
  std::vector<std::vector<Row>> stage;
  // open[k]: variable x_{k-1} lacked an upper or lower bound when eliminated.
  std::vector<bool> open;
  bool infeasible = false;
};

Stages eliminate(std::size_t dim, std::vector<Row> sys) {
  Stages st;
  st.stage.resize(dim + 1);
  st.open.assign(dim + 1, false);
  if (!compress(sys)) {
    st.infeasible = true;
    return st;
  }
  st.stage[dim] = std::move(sys);
  for (std::size_t k = dim; k >= 1; --k) {
    const std::size_t v = k - 1;
    std::vector<const Row*> pos, neg;
    std::vector<Row> next;
    for (const Row& r : st.stage[k]) {
      if (r.a[v] > 0)
        pos.push_back(&r);
      else if (r.a[v] < 0)
        neg.push_back(&r);
      else if (k > 1)
        next.push_back(r);
    }
    if (pos.empty() || neg.empty()) st.open[k] = true;
    if (k == 1) break;
    for (const Row* up : pos)
      for (const Row* lo : neg) {
        // up: a.x <= b with a_v > 0; lo: c.x <= d with c_v < 0.
        const Int s = up->a[v];
        const Int t = -lo->a[v];
        Row r;
        r.a.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) r.a[j] = t * up->a[j] + s * lo->a[j];
        r.b = t * up->b + s * lo->b;
        next.push_back(std::move(r));
      }
    if (!compress(next)) {
      st.infeasible = true;
      return st;
    }
    st.stage[k - 1] = std::move(next);
  }
  return st;
}

struct IntervalBounds {
  std::optional<Int> lo, hi;
};

// Bounds on x_t from stage t+1, given the fixed prefix x_0..x_{t-1}.
IntervalBounds bounds_at(const Stages& st, std::size_t t, const std::vector<Int>& x) {
  IntervalBounds iv;
  for (const Row& r : st.stage[t + 1]) {
    const Int& c = r.a[t];
    if (c == 0) continue;
    Int dot = 0;
    for (std::size_t j = 0; j < t; ++j)
      if (r.a[j] != 0) dot += r.a[j] * x[j];
    Int rhs = r.b - dot;
    if (c > 0) {
      Int u = floor_div(rhs, c);
      if (!iv.hi || u < *iv.hi) iv.hi = u;
    } else {
      Int l = ceil_div(dot - r.b, -c);
      if (!iv.lo || l > *iv.lo) iv.lo = l;
    }
  }
  return iv;
}

void enumerate_all(const Stages& st, std::size_t dim, std::size_t t, std::vector<Int>& x,
                   std::vector<std::vector<Int>>& out) {
  IntervalBounds iv = bounds_at(st, t, x);
  // Every variable was two-sided, so both bounds exist here.
  for (Int v = *iv.lo; v <= *iv.hi; ++v) {
    x[t] = v;
    if (t + 1 == dim)
      out.push_back(x);
    else
      enumerate_all(st, dim, t + 1, x, out);
  }
}

// Window scanned on a one-sided variable while hunting for a witness point.
constexpr int kOpenScanWidth = 64;

bool find_witness(const Stages& st, std::size_t dim, std::size_t t, std::vector<Int>& x) {
  IntervalBounds iv = bounds_at(st, t, x);
  Int lo, hi;
  if (iv.lo && iv.hi) {
    lo = *iv.lo;
    hi = *iv.hi;
  } else if (iv.lo) {
    lo = *iv.lo;
    hi = lo + (kOpenScanWidth - 1);
  } else if (iv.hi) {
    hi = *iv.hi;
    lo = hi - (kOpenScanWidth - 1);
  } else {
    lo = -(kOpenScanWidth / 2);
    hi = kOpenScanWidth / 2;
  }
  for (Int v = lo; v <= hi; ++v) {
    x[t] = v;
    if (t + 1 == dim) return true;
    if (find_witness(st, dim, t + 1, x)) return true;
  }
  return false;
}

}  // namespace

LatticePointResult lattice_points(const RationalPolyhedron& p) {
  const std::size_t dim = p.dimension;
  std::vector<Row> sys;
  sys.reserve(p.constraints.size());
  for (const Constraint& c : p.constraints) {
    if (c.normal.size() != dim) throw DomainError("constraint normal has wrong dimension");
    Row r;
    if (c.sense == Sense::LessEq) {
      r.a = c.normal;
      r.b = c.bound;
    } else {
      r.a.resize(dim);
      for (std::size_t j = 0; j < dim; ++j) r.a[j] = -c.normal[j];
      r.b = -c.bound;
    }
    sys.push_back(std::move(r));
  }

  LatticePointResult res;
  if (dim == 0) {
    for (const Row& r : sys)
      if (r.b < 0) return res;
    res.kind = Feasibility::Bounded;
    res.points.push_back({});
    return res;
  }

  Stages st = eliminate(dim, std::move(sys));
  if (st.infeasible) return res;

  bool any_open = false;
  for (std::size_t k = 1; k <= dim; ++k) any_open = any_open || st.open[k];

  std::vector<Int> x(dim);
  if (any_open) {
    if (find_witness(st, dim, 0, x)) res.kind = Feasibility::Unbounded;
    return res;
  }
  enumerate_all(st, dim, 0, x, res.points);
  if (!res.points.empty()) res.kind = Feasibility::Bounded;
  return res;
}

}  // namespace toricoh
