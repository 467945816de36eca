#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace posetpack {

inline constexpr int kDefaultPosetSizeCap = 16;

// Finite strict partial order on elements 0..size-1. Stores the transitive
// closure as per-element bitmasks and the covers as the transitive
// reduction, regardless of which generating set was supplied.
class Poset {
public:
  Poset() = default;  // empty placeholder; build() never returns one

  // Relations are ordered pairs (a,b) meaning a < b; any generating set of
  // the order is accepted. Throws RangeError on bad labels or sizes,
  // CycleError if the digraph has a directed cycle.
  static Poset build(int size, const std::vector<std::pair<int, int>>& relations,
                     int size_cap = kDefaultPosetSizeCap);

  static Poset chain(int k);      // k+1 totally ordered elements
  static Poset antichain(int t);  // t isolated elements, t >= 1
  static Poset v();               // a < b, a < c
  static Poset lambda();          // b < a, c < a
  static Poset j();               // a < b < c, a < d
  static Poset boolean(int k);    // containment order on subsets of [k]

  int size() const { return size_; }
  bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  std::uint32_t above(int a) const { return above_[a]; }

  // Transitive reduction, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Number of elements in a longest chain, minus one.
  int height() const;

  // Deterministic linear extension (Kahn's algorithm, smallest label first).
  std::vector<int> linear_extension() const;

  bool operator==(const Poset& other) const {
    return size_ == other.size_ && above_ == other.above_;
  }

private:
  int size_ = 0;
  std::vector<std::uint32_t> above_;  // above_[a] bit b set iff a < b
  std::vector<std::pair<int, int>> covers_;
};

}  // namespace posetpack
