#include "toricoh/support_complex.hpp"

#include <algorithm>
#include <set>

namespace toricoh {

SignPattern::SignPattern(std::size_t ray_count, std::vector<int> nonneg)
    : ray_count_(ray_count), nonneg_(std::move(nonneg)) {
  std::sort(nonneg_.begin(), nonneg_.end());
  nonneg_.erase(std::unique(nonneg_.begin(), nonneg_.end()), nonneg_.end());
  for (int i : nonneg_)
    if (i < 0 || static_cast<std::size_t>(i) >= ray_count_)
      throw DomainError("sign pattern index out of range");
}

SignPattern SignPattern::from_divisor(const std::vector<Int>& r) {
  std::vector<int> nn;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] >= 0) nn.push_back(static_cast<int>(i));
  return SignPattern(r.size(), std::move(nn));
}

SignPattern SignPattern::from_negative(std::size_t ray_count, const std::vector<int>& negative) {
  std::vector<char> is_neg(ray_count, 0);
  for (int i : negative) {
    if (i < 0 || static_cast<std::size_t>(i) >= ray_count)
      throw DomainError("sign pattern index out of range");
    is_neg[static_cast<std::size_t>(i)] = 1;
  }
  std::vector<int> nn;
  for (std::size_t i = 0; i < ray_count; ++i)
    if (!is_neg[i]) nn.push_back(static_cast<int>(i));
  return SignPattern(ray_count, std::move(nn));
}

SignPattern SignPattern::from_mask(std::size_t ray_count, std::uint64_t nonneg_mask) {
  std::vector<int> nn;
  for (std::size_t i = 0; i < ray_count; ++i)
    if (nonneg_mask & (std::uint64_t(1) << i)) nn.push_back(static_cast<int>(i));
  return SignPattern(ray_count, std::move(nn));
}

std::vector<int> SignPattern::negative() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ray_count_; ++i) {
    if (k < nonneg_.size() && nonneg_[k] == static_cast<int>(i))
      ++k;
    else
      out.push_back(static_cast<int>(i));
  }
  return out;
}

bool SignPattern::is_nonneg(int i) const {
  return std::binary_search(nonneg_.begin(), nonneg_.end(), i);
}

std::uint64_t SignPattern::mask() const {
  if (ray_count_ > 64) throw DomainError("sign pattern mask limited to 64 rays");
  std::uint64_t m = 0;
  for (int i : nonneg_) m |= std::uint64_t(1) << i;
  return m;
}

int SupportComplex::top_dimension() const {
  return static_cast<int>(faces_by_dim_.size()) - 1;
}

std::size_t SupportComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& fs : faces_by_dim_) n += fs.size();
  return n;
}

const std::vector<std::vector<int>>& SupportComplex::faces_of_dimension(int d) const {
  static const std::vector<std::vector<int>> kNone;
  if (d < 0 || d >= static_cast<int>(faces_by_dim_.size())) return kNone;
  return faces_by_dim_[static_cast<std::size_t>(d)];
}

bool SupportComplex::has_face(const std::vector<int>& sorted_vertices) const {
  if (sorted_vertices.empty()) return true;
  int d = static_cast<int>(sorted_vertices.size()) - 1;
  const auto& fs = faces_of_dimension(d);
  return std::binary_search(fs.begin(), fs.end(), sorted_vertices);
}

SupportComplex support_complex(const Fan& fan, const SignPattern& pattern) {
  if (pattern.ray_count() != fan.ray_count())
    throw DomainError("sign pattern does not match the fan's ray count");
  if (fan.ray_count() > 64) throw DomainError("support complexes limited to 64 rays");
  const std::uint64_t keep = pattern.mask();

  // Faces are the downward closure of the intersections (max cone) & keep;
  // cones are simplicial, so every subset of a cone lies in it.
  std::set<std::uint64_t> maximal_masks;
  for (const auto& c : fan.max_cones()) {
    std::uint64_t m = 0;
    for (int i : c) m |= std::uint64_t(1) << i;
    maximal_masks.insert(m & keep);
  }
  std::set<std::uint64_t> face_masks;
  for (std::uint64_t m : maximal_masks) {
    // enumerate submasks
    std::uint64_t sub = m;
    while (true) {
      face_masks.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }

  auto unpack = [&](std::uint64_t m) {
    std::vector<int> f;
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
      if (m & (std::uint64_t(1) << i)) f.push_back(static_cast<int>(i));
    return f;
  };

  SupportComplex out;
  out.ray_count_ = fan.ray_count();
  for (std::uint64_t m : face_masks) {
    std::vector<int> f = unpack(m);
    if (f.empty()) continue;  // the empty face is implicit
    std::size_t d = f.size() - 1;
    if (out.faces_by_dim_.size() <= d) out.faces_by_dim_.resize(d + 1);
    out.faces_by_dim_[d].push_back(std::move(f));
  }
  for (auto& fs : out.faces_by_dim_) std::sort(fs.begin(), fs.end());
  for (std::uint64_t m : maximal_masks) {
    bool is_max = m != 0;
    for (std::uint64_t other : maximal_masks)
      if (other != m && (m & other) == m) is_max = false;
    if (is_max) out.maximal_.push_back(unpack(m));
  }
  std::sort(out.maximal_.begin(), out.maximal_.end());
  return out;
}

}  // namespace toricoh
