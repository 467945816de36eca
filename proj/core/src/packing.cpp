#include "posetpack/packing.hpp"

#include <algorithm>
#include <bit>

#include "posetpack/errors.hpp"

namespace posetpack {

std::uint64_t LayerSpec::restriction_mask() const {
  std::uint64_t out = 0;
  for (int e : restriction) {
    if (e < 1 || e > 63) throw RangeError("restriction element out of mask range");
    out |= std::uint64_t{1} << (e - 1);
  }
  return out;
}

std::vector<Letter> letter_order(const Family& closure_family,
                                 const RunConfig& cfg) {
  const int k = closure_family.ground();
  const Family up = upset(closure_family, cfg);

  std::vector<std::uint64_t> below, above;  // U^-, U^+
  const std::uint64_t space = std::uint64_t{1} << k;
  for (std::uint64_t s = 0; s < space; ++s) {
    if (closure_family.contains(s)) continue;
    if (up.contains(s))
      below.push_back(s);
    else
      above.push_back(s);
  }
  // Descending cardinality puts every strict superset before its subsets,
  // which is the only ordering constraint inside a class.
  auto cmp = [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  };
  std::sort(below.begin(), below.end(), cmp);
  std::sort(above.begin(), above.end(), cmp);

  std::vector<Letter> out;
  out.reserve(below.size() + above.size() + 1);
  for (std::uint64_t m : below) out.push_back(Letter::of(m));
  out.push_back(Letter::e());
  for (std::uint64_t m : above) out.push_back(Letter::of(m));
  return out;
}

namespace {

struct LayerShape {
  int j;
  int restriction_size;
  std::vector<int> letter_ranks;  // indices into the letter order, E last
};

// Words of length <= iterations in lexicographic order; generating letters
// in alphabet order emits them sorted because no word is a proper prefix of
// another (E terminates every word).
void generate_words(const std::vector<Letter>& letters, int iterations,
                    std::vector<int>& prefix, int prefix_weight,
                    std::vector<LayerShape>& out) {
  for (int r = 0; r < static_cast<int>(letters.size()); ++r) {
    if (letters[r].end) {
      LayerShape shape;
      shape.j = static_cast<int>(prefix.size());
      shape.restriction_size = prefix_weight;
      shape.letter_ranks = prefix;
      shape.letter_ranks.push_back(r);
      out.push_back(std::move(shape));
    } else if (static_cast<int>(prefix.size()) < iterations - 1) {
      prefix.push_back(r);
      generate_words(letters, iterations, prefix,
                     prefix_weight + std::popcount(letters[r].mask), out);
      prefix.pop_back();
    }
  }
}

bool layer_fits(int n, int k, int j, int restriction_size, int base_rank) {
  if (base_rank < 0) return false;
  if (base_rank + k > n) return false;
  const int free_size = base_rank - restriction_size;
  if (free_size < 0) return false;
  if (free_size > n - k * (j + 1)) return false;
  return true;
}

bool all_layers_fit(int n, int k, const std::vector<LayerShape>& shapes,
                    std::size_t e_index) {
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const int b = n / 2 + (static_cast<int>(s) - static_cast<int>(e_index)) * (k + 1);
    if (!layer_fits(n, k, shapes[s].j, shapes[s].restriction_size, b))
      return false;
  }
  return true;
}

}  // namespace

PackingPlan build_plan(const Embedding& embedding, int n, int iterations,
                       const RunConfig& cfg) {
  if (iterations < 1) throw IterationError("iteration count must be >= 1");
  // word generation recurses one frame per iteration
  if (iterations > 1000) throw CapError("iteration counts are capped at 1000");
  if (n < 0) throw RangeError("ambient ground size must be nonnegative");
  if (n > 100000) throw CapError("plans are capped at n <= 100000");

  const int k = embedding.k;
  const Family image = embedding.image_family();
  const Family closed = closure(image, cfg);
  const std::vector<Letter> letters = letter_order(closed, cfg);

  // L = sum_{j<i} |U|^j layers, refused early when it explodes.
  const std::uint64_t alphabet = letters.size() - 1;
  std::uint64_t layer_count = 0;
  std::uint64_t power = 1;
  for (int j = 0; j < iterations; ++j) {
    layer_count += power;
    if (layer_count > cfg.search_budget)
      throw BudgetError(layer_count, "plan would need more than " +
                                         std::to_string(cfg.search_budget) +
                                         " layers");
    if (alphabet == 0) break;
    if (power > cfg.search_budget / alphabet)
      power = cfg.search_budget + 1;  // saturate; next round throws
    else
      power *= alphabet;
  }

  std::vector<LayerShape> shapes;
  std::vector<int> prefix;
  generate_words(letters, iterations, prefix, 0, shapes);

  std::size_t e_index = 0;
  for (std::size_t s = 0; s < shapes.size(); ++s)
    if (shapes[s].j == 0) e_index = s;

  if (!all_layers_fit(n, k, shapes, e_index)) {
    // Every constraint reads floor(n/2) >= A or ceil(n/2) >= B, so the
    // smallest feasible n is computable directly.
    long long need_floor = 0, need_ceil = 0;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      const long long delta =
          (static_cast<long long>(s) - static_cast<long long>(e_index)) * (k + 1);
      const long long r = shapes[s].restriction_size;
      need_floor = std::max({need_floor, -delta, r - delta});
      need_ceil = std::max({need_ceil, delta + k,
                            delta - r + static_cast<long long>(k) * (shapes[s].j + 1)});
    }
    int n_min = static_cast<int>(
        std::max({2 * need_floor, 2 * need_ceil - 1, 0LL}));
    while (!all_layers_fit(n_min, k, shapes, e_index)) ++n_min;
    throw TooSmallError(n_min, "ground size " + std::to_string(n) +
                                   " cannot host the plan; smallest feasible n is " +
                                   std::to_string(n_min));
  }

  PackingPlan plan;
  plan.n = n;
  plan.embedding = embedding;
  plan.closure_m = closed.size();
  plan.iterations = iterations;
  plan.layers.reserve(shapes.size());
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const LayerShape& shape = shapes[s];
    LayerSpec layer;
    layer.j = shape.j;
    layer.base_rank =
        n / 2 + (static_cast<int>(s) - static_cast<int>(e_index)) * (k + 1);
    for (int pos = 0; pos < shape.j; ++pos) {
      const Letter& letter = letters[shape.letter_ranks[pos]];
      layer.word.push_back(letter);
      for (int e = 1; e <= k; ++e)
        if ((letter.mask >> (e - 1)) & 1u)
          layer.restriction.push_back(e + k * pos);
    }
    layer.word.push_back(Letter::e());
    std::sort(layer.restriction.begin(), layer.restriction.end());
    plan.layers.push_back(std::move(layer));
  }
  return plan;
}

CopyCount count_copies(const PackingPlan& plan) {
  const int k = plan.embedding.k;
  CopyCount out;
  for (const LayerSpec& layer : plan.layers) {
    const int free_space = plan.n - k * (layer.j + 1);
    const int picks = layer.base_rank - layer.restriction_size();
    if (picks < 0 || free_space < 0)
      throw RangeError("malformed plan layer");
    out.copies += BigNat::binomial(static_cast<std::uint64_t>(free_space),
                                   static_cast<std::uint64_t>(picks));
  }
  out.family_size =
      out.copies * BigNat{static_cast<std::uint64_t>(plan.embedding.poset.size())};
  return out;
}

std::vector<PackedCopy> materialize(const PackingPlan& plan,
                                    const RunConfig& cfg) {
  const int n = plan.n;
  if (n > 63) throw CapError("materialization needs n <= 63");
  CopyCount totals = count_copies(plan);
  if (BigNat{cfg.materialize_budget} < totals.family_size) {
    std::uint64_t refused = totals.family_size <= BigNat{~std::uint64_t{0}}
                                ? totals.family_size.to_u64()
                                : ~std::uint64_t{0};
    throw BudgetError(refused, "materializing " + totals.family_size.to_string() +
                                   " sets exceeds budget " +
                                   std::to_string(cfg.materialize_budget));
  }

  const int k = plan.embedding.k;
  std::vector<PackedCopy> out;
  for (std::size_t li = 0; li < plan.layers.size(); ++li) {
    const LayerSpec& layer = plan.layers[li];
    const std::uint64_t restriction = layer.restriction_mask();
    const int shift = k * layer.j;
    const int free_lo = k * (layer.j + 1);  // free elements are free_lo+1..n
    const int free_count = n - free_lo;
    const int picks = layer.base_rank - layer.restriction_size();

    // Ascending enumeration of `picks`-subsets of the free tail.
    std::vector<int> combo(picks);
    for (int i = 0; i < picks; ++i) combo[i] = i;
    while (true) {
      std::uint64_t free_mask = 0;
      for (int i : combo) free_mask |= std::uint64_t{1} << (free_lo + i);

      std::vector<std::uint64_t> sets;
      sets.reserve(plan.embedding.image.size());
      for (std::uint64_t img : plan.embedding.image)
        sets.push_back(restriction | (img << shift) | free_mask);
      out.push_back(PackedCopy{Family(n, std::move(sets)), li});

      int pos = picks - 1;
      while (pos >= 0 && combo[pos] == free_count - (picks - pos)) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < picks; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  return out;
}

namespace {

// Strict-containment pattern over the family's canonical set order.
std::vector<std::uint8_t> containment_pattern(const Family& f) {
  const std::size_t s = f.size();
  std::vector<std::uint8_t> out(s * s, 0);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      out[a * s + b] = (a != b && mask_subset_of(f.masks()[a], f.masks()[b])) ? 1 : 0;
  return out;
}

VerifyReport check_pairwise(const std::vector<const Family*>& copies) {
  VerifyReport report;
  for (std::size_t a = 0; a + 1 < copies.size(); ++a) {
    for (std::size_t b = a + 1; b < copies.size(); ++b) {
      for (std::size_t x = 0; x < copies[a]->size(); ++x) {
        for (std::size_t y = 0; y < copies[b]->size(); ++y) {
          if (mask_related(copies[a]->masks()[x], copies[b]->masks()[y])) {
            report.pass = false;
            report.copy_a = a;
            report.copy_b = b;
            report.set_a = copies[a]->at(x);
            report.set_b = copies[b]->at(y);
            report.message = "copies " + std::to_string(a) + " and " +
                             std::to_string(b) + " share related sets " +
                             report.set_a->to_string() + " and " +
                             report.set_b->to_string();
            return report;
          }
        }
      }
    }
  }
  report.message = "all copies pairwise unrelated";
  return report;
}

}  // namespace

VerifyReport verify_unrelated(const std::vector<Family>& copies) {
  std::vector<const Family*> ptrs;
  ptrs.reserve(copies.size());
  for (const Family& f : copies) ptrs.push_back(&f);
  return check_pairwise(ptrs);
}

VerifyReport verify_copies(const std::vector<PackedCopy>& copies,
                           const PackingPlan& plan) {
  const Family image = plan.embedding.image_family();
  const auto expected = containment_pattern(image);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (copies[i].family.size() != image.size() ||
        containment_pattern(copies[i].family) != expected) {
      VerifyReport report;
      report.pass = false;
      report.bad_pattern_copy = i;
      report.message = "copy " + std::to_string(i) +
                       " does not reproduce the embedding image's containment pattern";
      return report;
    }
  }
  std::vector<const Family*> ptrs;
  ptrs.reserve(copies.size());
  for (const PackedCopy& c : copies) ptrs.push_back(&c.family);
  return check_pairwise(ptrs);
}

}  // namespace posetpack
