#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "posetpack/errors.hpp"

namespace posetpack {

// All elements of [n] as a bitmask; element e (1-based) is bit e-1.
constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr bool mask_subset_of(std::uint64_t a, std::uint64_t b) {
  return (a & ~b) == 0;
}

constexpr bool mask_related(std::uint64_t a, std::uint64_t b) {
  return mask_subset_of(a, b) || mask_subset_of(b, a);
}

// A subset of the ground set [n], n <= 63, as a characteristic vector.
struct Subset {
  int ground = 0;
  std::uint64_t bits = 0;

  Subset() = default;
  Subset(int n, std::uint64_t mask) : ground(n), bits(mask) {
    if (n < 0 || n > 63) throw RangeError("ground set size must be in [0,63]");
    if (mask & ~full_mask(n)) throw RangeError("subset exceeds its ground set");
  }

  int size() const { return std::popcount(bits); }
  bool contains(int element) const {
    return element >= 1 && element <= ground &&
           ((bits >> (element - 1)) & 1u);
  }
  bool subset_of(const Subset& other) const {
    return mask_subset_of(bits, other.bits);
  }
  bool proper_subset_of(const Subset& other) const {
    return bits != other.bits && mask_subset_of(bits, other.bits);
  }
  bool related_to(const Subset& other) const {
    return mask_related(bits, other.bits);
  }

  // 1-based elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e = 1; e <= ground; ++e)
      if ((bits >> (e - 1)) & 1u) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (a.ground != b.ground) return a.ground <=> b.ground;
    return a.bits <=> b.bits;
  }
};

}  // namespace posetpack
