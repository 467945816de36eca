#pragma once

#include <cstdint>
#include <vector>

#include "posetpack/config.hpp"
#include "posetpack/subset.hpp"

namespace posetpack {

// A deduplicated family of subsets of [n], kept sorted by characteristic
// vector. Families over grounds up to 63 are materialized as bitmasks.
class Family {
public:
  Family() = default;
  explicit Family(int ground);
  Family(int ground, std::vector<std::uint64_t> masks);

  int ground() const { return ground_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  Subset at(std::size_t i) const { return Subset(ground_, masks_[i]); }
  bool contains(std::uint64_t mask) const;

  bool operator==(const Family&) const = default;

private:
  int ground_ = 0;
  std::vector<std::uint64_t> masks_;
};

// D(F): every subset lying below some member.
Family downset(const Family& f, const RunConfig& cfg = {});

// U(F): every subset lying above some member.
Family upset(const Family& f, const RunConfig& cfg = {});

// D(F) n U(F), i.e. every set sandwiched between two members.
Family closure(const Family& f, const RunConfig& cfg = {});

bool is_convex(const Family& f, const RunConfig& cfg = {});

// True iff no set of one family contains or equals a set of the other.
bool unrelated(const Family& f1, const Family& f2);

}  // namespace posetpack
