#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "posetpack/config.hpp"
#include "posetpack/lattice.hpp"
#include "posetpack/poset.hpp"
#include "posetpack/rational.hpp"

namespace posetpack {

enum class EmbedMode { Weak, Strong };

// An injective order-preserving (weak) or order-reflecting (strong) map
// from a poset into B_k; image[e] is the subset assigned to element e.
struct Embedding {
  Poset poset;
  int k = 0;
  EmbedMode mode = EmbedMode::Weak;
  std::vector<std::uint64_t> image;

  Family image_family() const { return Family(k, image); }
  bool valid() const;
};

// Visits every mode-valid injective assignment exactly once, elements
// assigned along the fixed linear extension, candidate subsets in ascending
// characteristic-vector order. The visitor returns false to stop early.
// Returns the number of embeddings visited.
std::uint64_t enumerate_embeddings(
    const Poset& poset, int k, EmbedMode mode,
    const std::function<bool(const Embedding&)>& visit,
    const RunConfig& cfg = {});

std::size_t closure_size(const Embedding& e, const RunConfig& cfg = {});

struct ClosureCertificate {
  std::size_t m = 0;       // minimal closure size found
  int k = 0;               // ground size of the witness
  Embedding witness;
  EmbedMode mode = EmbedMode::Weak;
  int exhaustive_to = 0;   // every k up to this bound is covered by the claim
};

// c(P) (weak) or c*(P) (strong): minimize closure size over embeddings into
// B_k for all k up to k_max; k_max < 0 selects the default |P|.
ClosureCertificate minimal_closure(const Poset& poset, EmbedMode mode,
                                   int k_max = -1, const RunConfig& cfg = {});

struct RatioResult {
  BigRat ratio;        // max_i |P_i| / c(P_i), exact
  std::size_t index;   // least index attaining it
};

RatioResult best_ratio(const std::vector<Poset>& posets, EmbedMode mode,
                       const RunConfig& cfg = {});

}  // namespace posetpack
