#pragma once

#include <cstdint>
#include <vector>

#include "posetpack/bignat.hpp"
#include "posetpack/config.hpp"
#include "posetpack/embedding.hpp"
#include "posetpack/lattice.hpp"
#include "posetpack/poset.hpp"

namespace posetpack {

// All distinct copies (embedding images) of a poset in B_n.
struct CopyCatalog {
  int n = 0;
  EmbedMode mode = EmbedMode::Weak;
  std::vector<Family> copies;  // deduplicated, sorted
};

CopyCatalog enumerate_copies(const Poset& poset, int n, EmbedMode mode,
                             const RunConfig& cfg = {});

struct PaResult {
  std::uint64_t family_size = 0;  // |P| * (max number of unrelated copies)
  std::vector<Family> witness;    // lexicographically least optimum
};

// Exact pa(n,P) / pa*(n,P) by branch-and-bound maximum clique on the
// copy compatibility graph.
PaResult pa_exact(const Poset& poset, int n, EmbedMode mode,
                  const RunConfig& cfg = {});

// Exact pa over a collection: maximum total family size over pairwise
// unrelated copies drawn from any of the posets (weighted clique).
std::uint64_t pa_exact_collection(const std::vector<Poset>& posets, int n,
                                  EmbedMode mode, const RunConfig& cfg = {});

// (k+1) * C(n-k, floor((n-k)/2)): the exact packing number of the
// (k+1)-element chain.
BigNat gst_formula(int k, int n);

}  // namespace posetpack
