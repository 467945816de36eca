#include "posetpack/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "posetpack/errors.hpp"

namespace posetpack {

CopyCatalog enumerate_copies(const Poset& poset, int n, EmbedMode mode,
                             const RunConfig& cfg) {
  std::set<std::vector<std::uint64_t>> images;
  std::function<bool(const Embedding&)> visit = [&](const Embedding& e) {
    std::vector<std::uint64_t> sorted = e.image;
    std::sort(sorted.begin(), sorted.end());
    images.insert(std::move(sorted));
    if (images.size() > cfg.copy_budget)
      throw BudgetError(images.size(),
                        "copy catalog exceeds budget " +
                            std::to_string(cfg.copy_budget));
    return true;
  };
  enumerate_embeddings(poset, n, mode, visit, cfg);

  CopyCatalog catalog;
  catalog.n = n;
  catalog.mode = mode;
  catalog.copies.reserve(images.size());
  for (const auto& masks : images) catalog.copies.emplace_back(n, masks);
  return catalog;
}

namespace {

// Compatibility graph over catalog copies: an edge means the two copies are
// unrelated and may appear in the same packing.
struct CliqueGraph {
  std::size_t order = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> adj;  // row-major bitset

  bool edge(std::size_t a, std::size_t b) const {
    return (adj[a * words + b / 64] >> (b % 64)) & 1u;
  }
  void set_edge(std::size_t a, std::size_t b) {
    adj[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    adj[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
  }
};

CliqueGraph build_graph(const std::vector<const Family*>& copies) {
  CliqueGraph g;
  g.order = copies.size();
  g.words = (g.order + 63) / 64;
  g.adj.assign(g.order * g.words, 0);
  for (std::size_t a = 0; a + 1 < g.order; ++a)
    for (std::size_t b = a + 1; b < g.order; ++b)
      if (unrelated(*copies[a], *copies[b])) g.set_edge(a, b);
  return g;
}

using Bits = std::vector<std::uint64_t>;

std::size_t bits_count(const Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Greedy colouring of the candidate set in vertex order; returns vertices
// in colour-class order together with each vertex's colour number, the
// classic branch ordering bound for exact maximum clique.
void colour_sort(const CliqueGraph& g, const Bits& cand,
                 std::vector<std::size_t>& verts, std::vector<int>& colours) {
  verts.clear();
  colours.clear();
  Bits uncoloured = cand;
  int colour = 0;
  while (bits_count(uncoloured) > 0) {
    ++colour;
    Bits admissible = uncoloured;
    for (std::size_t w = 0; w < admissible.size(); ++w) {
      std::uint64_t word = admissible[w];
      while (word) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        if (!((admissible[w] >> (v % 64)) & 1u)) continue;
        verts.push_back(v);
        colours.push_back(colour);
        uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        // remove v and its neighbours from this colour class
        admissible[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        for (std::size_t x = 0; x < admissible.size(); ++x)
          admissible[x] &= ~g.adj[v * g.words + x];
      }
    }
  }
}

struct MaxCliqueSolver {
  const CliqueGraph& g;
  std::size_t best = 0;
  std::vector<std::size_t> current;

  explicit MaxCliqueSolver(const CliqueGraph& graph) : g(graph) {}

  void expand(const Bits& cand) {
    std::vector<std::size_t> verts;
    std::vector<int> colours;
    colour_sort(g, cand, verts, colours);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(colours[i]) <= best) return;
      const std::size_t v = verts[i];
      Bits next(g.words, 0);
      bool any = false;
      for (std::size_t w = 0; w < g.words; ++w) {
        next[w] = cand[w] & g.adj[v * g.words + w];
        any = any || next[w];
      }
      // only keep candidates that come earlier in the colour order
      Bits mask(g.words, 0);
      for (std::size_t jj = 0; jj < i; ++jj)
        mask[verts[jj] / 64] |= std::uint64_t{1} << (verts[jj] % 64);
      any = false;
      for (std::size_t w = 0; w < g.words; ++w) {
        next[w] &= mask[w];
        any = any || next[w];
      }
      current.push_back(v);
      if (any)
        expand(next);
      else
        best = std::max(best, current.size());
      current.pop_back();
    }
  }

  std::size_t solve() {
    Bits all(g.words, 0);
    for (std::size_t v = 0; v < g.order; ++v)
      all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (g.order == 0) return 0;
    expand(all);
    return best;
  }

  // Decision variant: does a clique of size `target` exist inside cand?
  bool exists(const Bits& cand, std::size_t target) {
    if (target == 0) return true;
    if (bits_count(cand) < target) return false;
    std::vector<std::size_t> verts;
    std::vector<int> colours;
    colour_sort(g, cand, verts, colours);
    if (verts.empty() ||
        static_cast<std::size_t>(colours.back()) < target)
      return false;
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (static_cast<std::size_t>(colours[i]) < target) return false;
      const std::size_t v = verts[i];
      Bits next(g.words, 0);
      Bits mask(g.words, 0);
      for (std::size_t jj = 0; jj < i; ++jj)
        mask[verts[jj] / 64] |= std::uint64_t{1} << (verts[jj] % 64);
      for (std::size_t w = 0; w < g.words; ++w)
        next[w] = cand[w] & g.adj[v * g.words + w] & mask[w];
      if (exists(next, target - 1)) return true;
    }
    return false;
  }
};

// Lexicographically least maximum clique: extend greedily in vertex order,
// keeping only vertices whose inclusion still allows a clique of the
// optimal size.
std::vector<std::size_t> lex_least_clique(const CliqueGraph& g,
                                          std::size_t omega) {
  MaxCliqueSolver solver(g);
  std::vector<std::size_t> prefix;
  Bits cand(g.words, 0);
  for (std::size_t v = 0; v < g.order; ++v)
    cand[v / 64] |= std::uint64_t{1} << (v % 64);
  for (std::size_t v = 0; v < g.order && prefix.size() < omega; ++v) {
    if (!((cand[v / 64] >> (v % 64)) & 1u)) continue;
    Bits next(g.words, 0);
    for (std::size_t w = 0; w < g.words; ++w)
      next[w] = cand[w] & g.adj[v * g.words + w];
    // zero out vertices <= v
    for (std::size_t w = 0; w <= v / 64 && w < g.words; ++w) {
      if (w < v / 64)
        next[w] = 0;
      else
        next[w] &= ~((v % 64 == 63) ? ~std::uint64_t{0}
                                    : ((std::uint64_t{1} << (v % 64 + 1)) - 1));
    }
    if (solver.exists(next, omega - prefix.size() - 1)) {
      prefix.push_back(v);
      cand = next;
    }
  }
  return prefix;
}

void check_clique_budget(std::size_t order, const RunConfig& cfg) {
  if (order > cfg.clique_budget)
    throw BudgetError(order, "clique search over " + std::to_string(order) +
                                 " copies exceeds budget " +
                                 std::to_string(cfg.clique_budget));
}

}  // namespace

PaResult pa_exact(const Poset& poset, int n, EmbedMode mode,
                  const RunConfig& cfg) {
  CopyCatalog catalog = enumerate_copies(poset, n, mode, cfg);
  check_clique_budget(catalog.copies.size(), cfg);
  std::vector<const Family*> ptrs;
  ptrs.reserve(catalog.copies.size());
  for (const Family& f : catalog.copies) ptrs.push_back(&f);
  CliqueGraph g = build_graph(ptrs);

  MaxCliqueSolver solver(g);
  const std::size_t omega = solver.solve();

  PaResult out;
  out.family_size = static_cast<std::uint64_t>(omega) *
                    static_cast<std::uint64_t>(poset.size());
  for (std::size_t v : lex_least_clique(g, omega))
    out.witness.push_back(catalog.copies[v]);
  return out;
}

std::uint64_t pa_exact_collection(const std::vector<Poset>& posets, int n,
                                  EmbedMode mode, const RunConfig& cfg) {
  if (posets.empty()) throw RangeError("collection must not be empty");
  std::vector<Family> copies;
  std::vector<std::uint64_t> weights;
  for (const Poset& p : posets) {
    CopyCatalog catalog = enumerate_copies(p, n, mode, cfg);
    for (Family& f : catalog.copies) {
      copies.push_back(std::move(f));
      weights.push_back(static_cast<std::uint64_t>(p.size()));
    }
  }
  check_clique_budget(copies.size(), cfg);
  std::vector<const Family*> ptrs;
  ptrs.reserve(copies.size());
  for (const Family& f : copies) ptrs.push_back(&f);
  CliqueGraph g = build_graph(ptrs);

  // Weighted branch and bound; colour classes bound the residual weight by
  // their heaviest member.
  std::uint64_t best = 0;
  std::vector<std::size_t> verts;
  std::vector<int> colours;
  std::function<void(const Bits&, std::uint64_t)> expand =
      [&](const Bits& cand, std::uint64_t weight) {
        best = std::max(best, weight);
        std::vector<std::size_t> local_verts;
        std::vector<int> local_colours;
        colour_sort(g, cand, local_verts, local_colours);
        if (local_verts.empty()) return;
        const int colour_count = local_colours.back();
        std::vector<std::uint64_t> class_max(colour_count + 1, 0);
        for (std::size_t i = 0; i < local_verts.size(); ++i)
          class_max[local_colours[i]] =
              std::max(class_max[local_colours[i]], weights[local_verts[i]]);
        std::vector<std::uint64_t> bound_up_to(colour_count + 1, 0);
        for (int c = 1; c <= colour_count; ++c)
          bound_up_to[c] = bound_up_to[c - 1] + class_max[c];
        for (std::size_t i = local_verts.size(); i-- > 0;) {
          if (weight + bound_up_to[local_colours[i]] <= best) return;
          const std::size_t v = local_verts[i];
          Bits next(g.words, 0);
          Bits mask(g.words, 0);
          for (std::size_t jj = 0; jj < i; ++jj)
            mask[local_verts[jj] / 64] |= std::uint64_t{1}
                                          << (local_verts[jj] % 64);
          for (std::size_t w = 0; w < g.words; ++w)
            next[w] = cand[w] & g.adj[v * g.words + w] & mask[w];
          expand(next, weight + weights[v]);
        }
      };
  Bits all(g.words, 0);
  for (std::size_t v = 0; v < g.order; ++v)
    all[v / 64] |= std::uint64_t{1} << (v % 64);
  if (g.order > 0) expand(all, 0);
  return best;
}

BigNat gst_formula(int k, int n) {
  if (k < 0 || n < k)
    throw RangeError("gst formula needs 0 <= k <= n");
  if (n > 100000)
    throw CapError("gst formula capped at n <= 100000");
  return BigNat{static_cast<std::uint64_t>(k + 1)} *
         BigNat::binomial(static_cast<std::uint64_t>(n - k),
                          static_cast<std::uint64_t>((n - k) / 2));
}

}  // namespace posetpack
