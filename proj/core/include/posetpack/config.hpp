#pragma once

#include <cstdint>

namespace posetpack {

// Explicit resource limits. Every exponential kernel checks one of these and
// refuses with a CapError/BudgetError/SizeError instead of hanging silently.
struct RunConfig {
  // Largest ground set for which down-sets, up-sets and closures are
  // enumerated (2^n membership tables).
  int enumeration_cap = 25;

  // Family size cap for inclusion-exclusion chain counting.
  int chain_family_cap = 30;

  // Ground cap for the subset-lattice DP chain-count oracle (n! must fit
  // in 64 bits).
  int chain_dp_cap = 20;

  // Poset element count cap; the embedding search is exponential in it.
  int poset_cap = 16;

  // Largest target ground size B_k for embedding enumeration.
  int embed_k_cap = 16;

  // Max candidate families examined by abar_bruteforce, and max layer count
  // accepted when building a packing plan.
  std::uint64_t search_budget = 1'000'000;

  // Max total set count materialized from a packing plan.
  std::uint64_t materialize_budget = 1'000'000;

  // Max distinct copies collected by enumerate_copies.
  std::uint64_t copy_budget = 100'000;

  // Max catalog size fed to the exact clique solver (the compatibility
  // graph is quadratic in it).
  std::uint64_t clique_budget = 5'000;

  int workers = 1;
  std::uint64_t seed = 0;
};

}  // namespace posetpack
