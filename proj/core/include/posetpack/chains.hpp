#pragma once

#include "posetpack/bignat.hpp"
#include "posetpack/config.hpp"
#include "posetpack/lattice.hpp"

namespace posetpack {

// a(F): number of full chains of B_n that meet F, by inclusion-exclusion
// over the chain subfamilies of F (non-chain subfamilies contribute zero,
// so only chains are enumerated).
BigNat chains_through(const Family& f, const RunConfig& cfg = {});

// Independent route to a(F): subset-lattice DP counting the full chains
// that avoid F, subtracted from n!.
BigNat chains_through_oracle(const Family& f, const RunConfig& cfg = {});

struct AbarResult {
  BigNat min_chains;
  Family witness;  // lexicographically least minimizer
};

// abar(m,n): minimum of a(F) over all m-subset families of B_n, by
// exhaustive search.
AbarResult abar_bruteforce(int m, int n, const RunConfig& cfg = {});

}  // namespace posetpack
