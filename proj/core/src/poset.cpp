#include "posetpack/poset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "posetpack/errors.hpp"

namespace posetpack {

Poset Poset::build(int size, const std::vector<std::pair<int, int>>& relations,
                   int size_cap) {
  if (size < 1)
    throw RangeError("poset must have at least one element");
  if (size > size_cap)
    throw RangeError("poset size " + std::to_string(size) +
                     " exceeds cap " + std::to_string(size_cap));

  std::vector<std::uint32_t> reach(size, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw RangeError("relation (" + std::to_string(a) + "," +
                       std::to_string(b) + ") references an element out of range");
    if (a == b) throw CycleError("relation (" + std::to_string(a) + "," +
                                 std::to_string(b) + ") is reflexive");
    reach[a] |= std::uint32_t{1} << b;
  }

  // Transitive closure by saturation; the matrices are at most 16x16.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < size; ++a) {
      std::uint32_t acc = reach[a];
      std::uint32_t frontier = reach[a];
      while (frontier) {
        int b = std::countr_zero(frontier);
        frontier &= frontier - 1;
        acc |= reach[b];
      }
      if (acc != reach[a]) {
        reach[a] = acc;
        changed = true;
      }
    }
  }

  for (int a = 0; a < size; ++a)
    if ((reach[a] >> a) & 1u)
      throw CycleError("relations contain a directed cycle through element " +
                       std::to_string(a));

  Poset p;
  p.size_ = size;
  p.above_ = std::move(reach);
  for (int a = 0; a < size; ++a) {
    std::uint32_t direct = p.above_[a];
    std::uint32_t implied = 0;
    std::uint32_t mids = direct;
    while (mids) {
      int c = std::countr_zero(mids);
      mids &= mids - 1;
      implied |= p.above_[c];
    }
    std::uint32_t cover_bits = direct & ~implied;
    while (cover_bits) {
      int b = std::countr_zero(cover_bits);
      cover_bits &= cover_bits - 1;
      p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Poset Poset::chain(int k) {
  if (k < 0) throw RangeError("chain length must be nonnegative");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i) rel.emplace_back(i, i + 1);
  return build(k + 1, rel);
}

Poset Poset::antichain(int t) {
  if (t < 1) throw RangeError("antichain needs at least one element");
  return build(t, {});
}

Poset Poset::v() { return build(3, {{0, 1}, {0, 2}}); }

Poset Poset::lambda() { return build(3, {{1, 0}, {2, 0}}); }

Poset Poset::j() { return build(4, {{0, 1}, {1, 2}, {0, 3}}); }

Poset Poset::boolean(int k) {
  if (k < 0) throw RangeError("boolean lattice order must be nonnegative");
  const int n = 1 << k;
  std::vector<std::pair<int, int>> rel;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && (s & ~t) == 0) rel.emplace_back(s, t);
  return build(n, rel);
}

int Poset::height() const {
  std::vector<int> depth(size_, 0);
  for (int e : linear_extension()) {
    for (int b = 0; b < size_; ++b)
      if (less(e, b)) depth[b] = std::max(depth[b], depth[e] + 1);
  }
  int h = 0;
  for (int d : depth) h = std::max(h, d);
  return h;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> indegree(size_, 0);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (less(a, b)) ++indegree[b];

  std::vector<int> order;
  std::vector<bool> emitted(size_, false);
  order.reserve(size_);
  while (static_cast<int>(order.size()) < size_) {
    for (int e = 0; e < size_; ++e) {
      if (!emitted[e] && indegree[e] == 0) {
        emitted[e] = true;
        order.push_back(e);
        for (int b = 0; b < size_; ++b)
          if (less(e, b)) --indegree[b];
        break;
      }
    }
  }
  return order;
}

}  // namespace posetpack
