#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetpack/bignat.hpp"
#include "posetpack/config.hpp"
#include "posetpack/embedding.hpp"
#include "posetpack/lattice.hpp"

namespace posetpack {

// One symbol of the layer alphabet: a subset of [k] outside the closure of
// the embedding image, or the end marker E.
struct Letter {
  bool end = false;
  std::uint64_t mask = 0;  // over [k]; meaningful only when !end

  static Letter e() { return Letter{true, 0}; }
  static Letter of(std::uint64_t m) { return Letter{false, m}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word V_0 V_1 ... V_{j-1} E; exactly one E, at the final position.
using Word = std::vector<Letter>;

struct LayerSpec {
  int j = 0;                     // iteration index == word length - 1
  std::vector<int> restriction;  // R, 1-based elements of [k*j], sorted
  int base_rank = 0;             // b
  Word word;

  int restriction_size() const { return static_cast<int>(restriction.size()); }
  std::uint64_t restriction_mask() const;  // requires max element <= 63
};

struct PackingPlan {
  int n = 0;
  Embedding embedding;
  std::size_t closure_m = 0;
  int iterations = 0;
  std::vector<LayerSpec> layers;  // base rank ascending == word lex order
};

// All letters in the packing order: U^- by descending cardinality (ties by
// ascending characteristic vector), then E, then U^+ likewise. The closure
// argument must be a convex family (the closure of an embedding image).
std::vector<Letter> letter_order(const Family& closure_family,
                                 const RunConfig& cfg = {});

// Lays out one layer per word of length <= iterations, base ranks spaced
// k+1 apart and anchored so the word "E" sits at floor(n/2). Throws
// TooSmallError (with the minimal feasible n) when any layer does not fit.
PackingPlan build_plan(const Embedding& embedding, int n, int iterations,
                       const RunConfig& cfg = {});

struct CopyCount {
  BigNat copies;
  BigNat family_size;
};

CopyCount count_copies(const PackingPlan& plan);

struct PackedCopy {
  Family family;
  std::size_t layer_index = 0;
};

// Lists every copy of the plan, grouped by layer, each layer's copies in
// ascending order of the free part B. Requires n <= 63 and a total set
// count within the materialization budget.
std::vector<PackedCopy> materialize(const PackingPlan& plan,
                                    const RunConfig& cfg = {});

struct VerifyReport {
  bool pass = true;
  // Least-index witness of a cross-copy relation, if any.
  std::optional<std::size_t> copy_a, copy_b;
  std::optional<Subset> set_a, set_b;
  // Least-index copy whose containment pattern differs from the image's.
  std::optional<std::size_t> bad_pattern_copy;
  std::string message;
};

// Pairwise unrelatedness over all copies.
VerifyReport verify_unrelated(const std::vector<Family>& copies);

// Pairwise unrelatedness plus a per-copy check that the containment pattern
// matches the plan's embedding image.
VerifyReport verify_copies(const std::vector<PackedCopy>& copies,
                           const PackingPlan& plan);

}  // namespace posetpack
