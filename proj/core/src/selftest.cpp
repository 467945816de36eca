#include "posetpack/selftest.hpp"

#include <algorithm>
#include <random>

#include "posetpack/chains.hpp"
#include "posetpack/embedding.hpp"
#include "posetpack/errors.hpp"
#include "posetpack/lattice.hpp"
#include "posetpack/packing.hpp"

namespace posetpack {

namespace {

using Rng = std::mt19937_64;

Family random_family(Rng& rng, int n, int max_sets) {
  std::uniform_int_distribution<int> size_dist(0, max_sets);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, full_mask(n));
  const int count = size_dist(rng);
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  for (int i = 0; i < count; ++i) masks.push_back(mask_dist(rng));
  return Family(n, std::move(masks));
}

bool family_subset(const Family& inner, const Family& outer) {
  return std::all_of(inner.masks().begin(), inner.masks().end(),
                     [&](std::uint64_t m) { return outer.contains(m); });
}

SuiteResult closure_laws(Rng& rng, const RunConfig& cfg, int rounds) {
  for (int round = 0; round < rounds; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Family f = random_family(rng, n, 10);
    Family closed = closure(f, cfg);
    if (!family_subset(f, closed))
      return {"closure-laws", false, "extensivity failed"};
    if (closure(closed, cfg) != closed)
      return {"closure-laws", false, "idempotence failed"};
    Family g = random_family(rng, n, 4);
    std::vector<std::uint64_t> merged = f.masks();
    merged.insert(merged.end(), g.masks().begin(), g.masks().end());
    Family bigger(n, std::move(merged));
    if (!family_subset(closed, closure(bigger, cfg)))
      return {"closure-laws", false, "monotonicity failed"};
  }
  return {"closure-laws", true,
          std::to_string(rounds) + " random families checked"};
}

SuiteResult closure_preserves_unrelated(Rng& rng, const RunConfig& cfg,
                                        int rounds) {
  int exercised = 0;
  for (int round = 0; round < rounds; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Family f = random_family(rng, n, 5);
    if (f.empty()) continue;
    // Draw the second family from the sets unrelated to all of f.
    std::vector<std::uint64_t> pool;
    for (std::uint64_t s = 0; s <= full_mask(n); ++s) {
      bool ok = true;
      for (std::uint64_t m : f.masks()) ok = ok && !mask_related(s, m);
      if (ok) pool.push_back(s);
    }
    if (pool.empty()) continue;
    std::vector<std::uint64_t> picked;
    const int want = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < want; ++i)
      picked.push_back(pool[rng() % pool.size()]);
    Family g(n, std::move(picked));
    if (!unrelated(f, g))
      return {"closure-unrelated", false, "rejection sampling broke"};
    if (!unrelated(closure(f, cfg), closure(g, cfg)))
      return {"closure-unrelated", false,
              "closures of unrelated families are related"};
    ++exercised;
  }
  if (exercised < rounds / 4)
    return {"closure-unrelated", false, "too few unrelated pairs sampled"};
  return {"closure-unrelated", true,
          std::to_string(exercised) + " unrelated pairs checked"};
}

SuiteResult chain_count_agreement(Rng& rng, const RunConfig& cfg, int rounds) {
  for (int round = 0; round < rounds; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Family f = random_family(rng, n, 6);
    if (chains_through(f, cfg) != chains_through_oracle(f, cfg))
      return {"chain-count-agreement", false,
              "inclusion-exclusion disagrees with the DP oracle"};
  }
  return {"chain-count-agreement", true,
          std::to_string(rounds) + " random families checked"};
}

SuiteResult chain_count_lower_bound(Rng& rng, const RunConfig& cfg,
                                    int rounds) {
  int exercised = 0;
  for (int round = 0; round < rounds; ++round) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int min_n = (1 << m) + 1;
    const int n = min_n + static_cast<int>(rng() % (11 - min_n >= 1 ? 11 - min_n : 1));
    if (n > 10) continue;
    // m distinct sets, neither empty nor full.
    std::vector<std::uint64_t> masks;
    std::uniform_int_distribution<std::uint64_t> mask_dist(1, full_mask(n) - 1);
    while (static_cast<int>(masks.size()) < m) {
      std::uint64_t s = mask_dist(rng);
      if (std::find(masks.begin(), masks.end(), s) == masks.end())
        masks.push_back(s);
    }
    Family f(n, masks);
    // a(F) >= (1 - 2^m/n) * sum_j |A_j|!(n-|A_j|)!; compare n*a >= (n-2^m)*sum.
    BigNat singleton_sum;
    for (std::uint64_t s : f.masks()) {
      const int sz = std::popcount(s);
      singleton_sum += BigNat::factorial(sz) * BigNat::factorial(n - sz);
    }
    BigNat lhs = BigNat{static_cast<std::uint64_t>(n - (1 << m))} * singleton_sum;
    BigNat rhs = BigNat{static_cast<std::uint64_t>(n)} * chains_through(f, cfg);
    if (rhs < lhs)
      return {"chain-count-lower-bound", false,
              "proposition bound violated on a sampled family"};
    ++exercised;
  }
  if (exercised < rounds / 2)
    return {"chain-count-lower-bound", false, "too few families sampled"};
  return {"chain-count-lower-bound", true,
          std::to_string(exercised) + " sampled families checked"};
}

SuiteResult deterministic_results(const RunConfig& cfg) {
  ClosureCertificate a = minimal_closure(Poset::v(), EmbedMode::Weak, -1, cfg);
  ClosureCertificate b = minimal_closure(Poset::v(), EmbedMode::Weak, -1, cfg);
  if (a.m != b.m || a.k != b.k || a.witness.image != b.witness.image)
    return {"determinism", false, "minimal_closure is not reproducible"};
  AbarResult x = abar_bruteforce(1, 4, cfg);
  AbarResult y = abar_bruteforce(1, 4, cfg);
  if (x.min_chains != y.min_chains || x.witness != y.witness)
    return {"determinism", false, "abar_bruteforce is not reproducible"};
  PackingPlan plan = build_plan(a.witness, 12, 2, cfg);
  auto copies1 = materialize(plan, cfg);
  auto copies2 = materialize(plan, cfg);
  if (copies1.size() != copies2.size())
    return {"determinism", false, "materialize is not reproducible"};
  for (std::size_t i = 0; i < copies1.size(); ++i)
    if (copies1[i].family != copies2[i].family ||
        copies1[i].layer_index != copies2[i].layer_index)
      return {"determinism", false, "materialize is not reproducible"};
  return {"determinism", true, "search and construction outputs reproducible"};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, const RunConfig& cfg) {
  std::vector<SuiteResult> results;
  {
    Rng rng(seed);
    results.push_back(closure_laws(rng, cfg, 500));
  }
  {
    Rng rng(seed + 1);
    results.push_back(closure_preserves_unrelated(rng, cfg, 500));
  }
  {
    Rng rng(seed + 2);
    results.push_back(chain_count_agreement(rng, cfg, 200));
  }
  {
    Rng rng(seed + 3);
    results.push_back(chain_count_lower_bound(rng, cfg, 200));
  }
  results.push_back(deterministic_results(cfg));
  return results;
}

}  // namespace posetpack
