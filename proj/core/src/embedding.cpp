#include "posetpack/embedding.hpp"

#include <algorithm>
#include <string>

#include "posetpack/errors.hpp"

namespace posetpack {

bool Embedding::valid() const {
  const int p = poset.size();
  if (static_cast<int>(image.size()) != p) return false;
  const std::uint64_t universe = full_mask(k);
  for (int a = 0; a < p; ++a) {
    if (image[a] & ~universe) return false;
    for (int b = 0; b < p; ++b) {
      if (a == b) continue;
      if (image[a] == image[b]) return false;
      if (poset.less(a, b)) {
        if (!mask_subset_of(image[a], image[b])) return false;
      } else if (mode == EmbedMode::Strong && !poset.less(b, a)) {
        if (mask_related(image[a], image[b])) return false;
      }
    }
  }
  return true;
}

namespace {

// |closure| of the first `count` assigned images inside B_k, by direct scan;
// the search keeps k small so 2^k stays tiny.
std::size_t partial_closure_size(const std::vector<std::uint64_t>& images,
                                 std::size_t count, int k) {
  const std::uint64_t space = std::uint64_t{1} << k;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < space; ++s) {
    bool below = false, above = false;
    for (std::size_t i = 0; i < count && !(below && above); ++i) {
      below = below || mask_subset_of(images[i], s);
      above = above || mask_subset_of(s, images[i]);
    }
    if (below && above) ++total;
  }
  return total;
}

struct EmbedSearch {
  const Poset& poset;
  int k;
  EmbedMode mode;
  std::vector<int> order;
  std::uint64_t space = 0;
  Embedding scratch;
  std::uint64_t visited = 0;
  bool stopped = false;

  // prune(d) may reject a partial assignment of the first d extension slots.
  const std::function<bool(const std::vector<std::uint64_t>&, std::size_t)>*
      prune = nullptr;
  const std::function<bool(const Embedding&)>* leaf = nullptr;
  std::vector<std::uint64_t> assigned;  // in extension order

  EmbedSearch(const Poset& p, int k_, EmbedMode m)
      : poset(p), k(k_), mode(m), order(p.linear_extension()),
        space(std::uint64_t{1} << k_), scratch{p, k_, m, {}} {
    scratch.image.assign(p.size(), 0);
    assigned.assign(p.size(), 0);
  }

  bool admissible(int element, std::uint64_t candidate, std::size_t depth) const {
    for (std::size_t t = 0; t < depth; ++t) {
      const int prior = order[t];
      const std::uint64_t prior_mask = assigned[t];
      if (prior_mask == candidate) return false;
      if (poset.less(prior, element)) {
        if (!(prior_mask != candidate && mask_subset_of(prior_mask, candidate)))
          return false;
      } else if (mode == EmbedMode::Strong && !poset.less(element, prior)) {
        if (mask_related(prior_mask, candidate)) return false;
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      ++visited;
      for (std::size_t t = 0; t < order.size(); ++t)
        scratch.image[order[t]] = assigned[t];
      if (!(*leaf)(scratch)) stopped = true;
      return;
    }
    const int element = order[depth];
    for (std::uint64_t cand = 0; cand < space && !stopped; ++cand) {
      if (!admissible(element, cand, depth)) continue;
      assigned[depth] = cand;
      if (prune != nullptr && (*prune)(assigned, depth + 1)) continue;
      run(depth + 1);
    }
  }
};

std::uint64_t embed_search(
    const Poset& poset, int k, EmbedMode mode,
    const std::function<bool(const Embedding&)>& leaf,
    const std::function<bool(const std::vector<std::uint64_t>&, std::size_t)>*
        prune,
    const RunConfig& cfg) {
  if (k < 0 || k > cfg.embed_k_cap)
    throw CapError("target ground size " + std::to_string(k) +
                   " outside [0," + std::to_string(cfg.embed_k_cap) + "]");
  if (poset.size() > cfg.poset_cap)
    throw CapError("poset size exceeds cap " + std::to_string(cfg.poset_cap));

  EmbedSearch search(poset, k, mode);
  search.leaf = &leaf;
  search.prune = prune;
  search.run(0);
  return search.visited;
}

}  // namespace

std::uint64_t enumerate_embeddings(
    const Poset& poset, int k, EmbedMode mode,
    const std::function<bool(const Embedding&)>& visit, const RunConfig& cfg) {
  return embed_search(poset, k, mode, visit, nullptr, cfg);
}

std::size_t closure_size(const Embedding& e, const RunConfig& cfg) {
  (void)cfg;
  return partial_closure_size(e.image, e.image.size(), e.k);
}

ClosureCertificate minimal_closure(const Poset& poset, EmbedMode mode,
                                   int k_max, const RunConfig& cfg) {
  const int p = poset.size();
  if (k_max < 0) k_max = p;
  const int h = poset.height();
  int log_cap = 0;
  while ((1 << log_cap) < p) ++log_cap;
  const int k_start = std::max(h, log_cap);

  // No embedding can close below either bound: the image has |P| distinct
  // sets, and a longest chain's image spans an interval of 2^h sets.
  const std::size_t lower_bound =
      std::max<std::size_t>(static_cast<std::size_t>(p),
                            std::size_t{1} << h);

  bool found = false;
  std::size_t best_m = 0;
  Embedding best;
  int best_k = 0;

  for (int k = k_start; k <= k_max; ++k) {
    std::function<bool(const std::vector<std::uint64_t>&, std::size_t)> prune =
        [&](const std::vector<std::uint64_t>& assigned, std::size_t count) {
          if (!found) return false;
          // Closure is monotone, so a partial image already at or past the
          // incumbent cannot lead to a strict improvement.
          return partial_closure_size(assigned, count, k) >= best_m;
        };
    bool done = false;
    std::function<bool(const Embedding&)> leaf = [&](const Embedding& e) {
      const std::size_t m = partial_closure_size(e.image, e.image.size(), e.k);
      if (!found || m < best_m) {
        found = true;
        best_m = m;
        best = e;
        best_k = k;
        if (m == lower_bound) {
          done = true;
          return false;
        }
      }
      return true;
    };
    embed_search(poset, k, mode, leaf, &prune, cfg);
    if (done) break;
  }

  if (!found)
    throw InfeasibleError("no " +
                          std::string(mode == EmbedMode::Weak ? "weak" : "strong") +
                          " embedding exists for any k <= " +
                          std::to_string(k_max));
  return ClosureCertificate{best_m, best_k, best, mode, k_max};
}

RatioResult best_ratio(const std::vector<Poset>& posets, EmbedMode mode,
                       const RunConfig& cfg) {
  if (posets.empty()) throw RangeError("best_ratio needs at least one poset");
  RatioResult out{BigRat{}, 0};
  bool first = true;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    ClosureCertificate cert = minimal_closure(posets[i], mode, -1, cfg);
    BigRat ratio(static_cast<std::uint64_t>(posets[i].size()),
                 static_cast<std::uint64_t>(cert.m));
    if (first || out.ratio < ratio) {
      out = RatioResult{ratio, i};
      first = false;
    }
  }
  return out;
}

}  // namespace posetpack
