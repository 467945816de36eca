#include "posetpack/lattice.hpp"

#include <algorithm>
#include <string>

#include "posetpack/errors.hpp"

namespace posetpack {

Family::Family(int ground) : ground_(ground) {
  if (ground < 0 || ground > 63)
    throw RangeError("family ground size must be in [0,63]");
}

Family::Family(int ground, std::vector<std::uint64_t> masks)
    : ground_(ground), masks_(std::move(masks)) {
  if (ground < 0 || ground > 63)
    throw RangeError("family ground size must be in [0,63]");
  for (std::uint64_t m : masks_)
    if (m & ~full_mask(ground))
      throw RangeError("family contains a set outside its ground set");
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

bool Family::contains(std::uint64_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

namespace {

enum class Closed { Down, Up };

// Membership table of the down-set (up-set) over all of B_n via subset-sum
// style propagation, O(n 2^n).
std::vector<std::uint8_t> closed_table(const Family& f, Closed dir,
                                       const RunConfig& cfg) {
  const int n = f.ground();
  if (n > cfg.enumeration_cap)
    throw CapError("ground size " + std::to_string(n) +
                   " exceeds enumeration cap " +
                   std::to_string(cfg.enumeration_cap));
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<std::uint8_t> mark(full, 0);
  for (std::uint64_t m : f.masks()) mark[m] = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < full; ++s) {
      if (dir == Closed::Down) {
        if (!(s & bit)) mark[s] |= mark[s | bit];
      } else {
        if (s & bit) mark[s] |= mark[s ^ bit];
      }
    }
  }
  return mark;
}

Family collect(int n, const std::vector<std::uint8_t>& mark) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < mark.size(); ++s)
    if (mark[s]) out.push_back(s);
  return Family(n, std::move(out));
}

}  // namespace

Family downset(const Family& f, const RunConfig& cfg) {
  return collect(f.ground(), closed_table(f, Closed::Down, cfg));
}

Family upset(const Family& f, const RunConfig& cfg) {
  return collect(f.ground(), closed_table(f, Closed::Up, cfg));
}

Family closure(const Family& f, const RunConfig& cfg) {
  auto down = closed_table(f, Closed::Down, cfg);
  auto up = closed_table(f, Closed::Up, cfg);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < down.size(); ++s)
    if (down[s] && up[s]) out.push_back(s);
  return Family(f.ground(), std::move(out));
}

bool is_convex(const Family& f, const RunConfig& cfg) {
  return closure(f, cfg) == f;
}

bool unrelated(const Family& f1, const Family& f2) {
  if (f1.ground() != f2.ground())
    throw GroundMismatchError("families live over different ground sets");
  for (std::uint64_t a : f1.masks())
    for (std::uint64_t b : f2.masks())
      if (mask_related(a, b)) return false;
  return true;
}

}  // namespace posetpack
