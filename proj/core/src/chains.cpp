#include "posetpack/chains.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <thread>

#include "posetpack/errors.hpp"

namespace posetpack {

BigNat chains_through(const Family& f, const RunConfig& cfg) {
  if (static_cast<int>(f.size()) > cfg.chain_family_cap)
    throw SizeError("family size " + std::to_string(f.size()) +
                    " exceeds chain-counting cap " +
                    std::to_string(cfg.chain_family_cap));
  const int n = f.ground();
  const auto& masks = f.masks();

  std::vector<std::size_t> order(masks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ca = std::popcount(masks[a]), cb = std::popcount(masks[b]);
    if (ca != cb) return ca < cb;
    return masks[a] < masks[b];
  });

  std::vector<BigNat> fact(n + 1);
  for (int i = 0; i <= n; ++i) fact[i] = BigNat::factorial(i);

  // Alternating inclusion-exclusion sum; the two signs are accumulated
  // separately since the total is known to be nonnegative.
  BigNat plus, minus;
  // prefix carries |A_1|! * prod of successive size-difference factorials,
  // i.e. the chain's b(...) term without its trailing (n-|A_last|)! factor.
  std::function<void(std::size_t, const BigNat&, int)> extend =
      [&](std::size_t at, const BigNat& prefix, int len) {
        const std::uint64_t last = masks[order[at]];
        const int last_size = std::popcount(last);
        for (std::size_t q = at + 1; q < order.size(); ++q) {
          const std::uint64_t next = masks[order[q]];
          if (!mask_subset_of(last, next)) continue;
          const int next_size = std::popcount(next);
          BigNat longer = prefix * fact[next_size - last_size];
          BigNat term = longer * fact[n - next_size];
          (((len + 1) % 2 == 1) ? plus : minus) += term;
          extend(q, longer, len + 1);
        }
      };

  for (std::size_t s = 0; s < order.size(); ++s) {
    const int sz = std::popcount(masks[order[s]]);
    BigNat prefix = fact[sz];
    plus += prefix * fact[n - sz];
    extend(s, prefix, 1);
  }
  return plus - minus;
}

BigNat chains_through_oracle(const Family& f, const RunConfig& cfg) {
  const int n = f.ground();
  if (n > cfg.chain_dp_cap)
    throw CapError("ground size " + std::to_string(n) +
                   " exceeds chain DP cap " + std::to_string(cfg.chain_dp_cap));
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<std::uint8_t> mark(full, 0);
  for (std::uint64_t m : f.masks()) mark[m] = 1;

  // ways[s] = number of maximal empty-to-s chains avoiding F entirely.
  std::vector<std::uint64_t> ways(full, 0);
  ways[0] = mark[0] ? 0 : 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    if (mark[s]) continue;
    std::uint64_t acc = 0;
    std::uint64_t bits = s;
    while (bits) {
      std::uint64_t low = bits & (~bits + 1);
      bits ^= low;
      acc += ways[s ^ low];
    }
    ways[s] = acc;
  }
  std::uint64_t total = 1;
  for (int i = 2; i <= n; ++i) total *= static_cast<std::uint64_t>(i);
  return BigNat{total - ways[full - 1]};
}

namespace {

struct AbarCandidate {
  bool found = false;
  BigNat count;
  std::vector<std::uint64_t> masks;
};

// Lexicographic enumeration of all m-combinations with a fixed first mask,
// feeding each candidate family to the evaluator.
void abar_scan_first(std::uint64_t first, int m, std::uint64_t space, int n,
                     const RunConfig& cfg, AbarCandidate& best) {
  std::vector<std::uint64_t> combo(m);
  combo[0] = first;
  for (int i = 1; i < m; ++i) combo[i] = first + i;
  if (combo.back() >= space && m > 1) return;

  auto evaluate = [&]() {
    Family fam(n, combo);
    BigNat a = chains_through(fam, cfg);
    if (!best.found || a < best.count) {
      best.found = true;
      best.count = std::move(a);
      best.masks = combo;
    }
  };

  if (m == 1) {
    evaluate();
    return;
  }
  while (true) {
    evaluate();
    int pos = m - 1;
    while (pos >= 1 && combo[pos] == space - (m - pos)) --pos;
    if (pos < 1) break;
    ++combo[pos];
    for (int i = pos + 1; i < m; ++i) combo[i] = combo[i - 1] + 1;
  }
}

}  // namespace

AbarResult abar_bruteforce(int m, int n, const RunConfig& cfg) {
  if (n < 0 || n > 63) throw RangeError("ground size must be in [0,63]");
  if (m < 1) throw RangeError("family size must be at least 1");
  const std::uint64_t space = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(m) > space)
    throw RangeError("family size exceeds the number of subsets of [n]");

  // C(2^n, m) candidates; refuse before computing anything expensive.
  if (m >= 2 && space > cfg.search_budget)
    throw BudgetError(space, "abar search space 2^" + std::to_string(n) +
                                 " choose " + std::to_string(m) +
                                 " exceeds budget " +
                                 std::to_string(cfg.search_budget));
  BigNat candidates = BigNat::binomial(space, static_cast<std::uint64_t>(m));
  if (BigNat{cfg.search_budget} < candidates) {
    std::uint64_t refused =
        candidates <= BigNat{~std::uint64_t{0}} ? candidates.to_u64()
                                                : ~std::uint64_t{0};
    throw BudgetError(refused, "abar search over " + candidates.to_string() +
                                   " families exceeds budget " +
                                   std::to_string(cfg.search_budget));
  }

  const std::uint64_t first_max = space - static_cast<std::uint64_t>(m);
  const int workers =
      std::max(1, std::min<int>(cfg.workers,
                                static_cast<int>(first_max) + 1));

  std::vector<AbarCandidate> partial(workers);
  if (workers == 1) {
    for (std::uint64_t f0 = 0; f0 <= first_max; ++f0)
      abar_scan_first(f0, m, space, n, cfg, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::uint64_t f0 = static_cast<std::uint64_t>(w); f0 <= first_max;
             f0 += static_cast<std::uint64_t>(workers))
          abar_scan_first(f0, m, space, n, cfg, partial[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Deterministic merge: smallest count, ties to the lexicographically
  // least witness family.
  const AbarCandidate* best = nullptr;
  for (const auto& cand : partial) {
    if (!cand.found) continue;
    if (best == nullptr || cand.count < best->count ||
        (cand.count == best->count && cand.masks < best->masks))
      best = &cand;
  }
  return AbarResult{best->count, Family(n, best->masks)};
}

}  // namespace posetpack
