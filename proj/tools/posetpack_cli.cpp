// posetpack command line: every library operation behind one binary with
// JSON/TSV output and explicit resource budgets.
//
// Exit codes: 0 success, 2 input error, 3 budget error, 4 verification
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetpack/chains.hpp"
#include "posetpack/config.hpp"
#include "posetpack/embedding.hpp"
#include "posetpack/errors.hpp"
#include "posetpack/json_io.hpp"
#include "posetpack/lattice.hpp"
#include "posetpack/oracle.hpp"
#include "posetpack/packing.hpp"
#include "posetpack/poset.hpp"
#include "posetpack/rational.hpp"
#include "posetpack/selftest.hpp"

using nlohmann::json;
using namespace posetpack;

namespace {

struct CliOptions {
  RunConfig config;
  bool json_output = false;
};

std::string mode_name(EmbedMode mode) {
  return mode == EmbedMode::Weak ? "weak" : "strong";
}

void emit(const CliOptions& opts, const json& doc) {
  if (opts.json_output) {
    std::cout << doc.dump(2) << std::endl;
    return;
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const json& value = it.value();
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      // table: one row per entry
      for (const json& row : value) {
        std::cout << it.key();
        for (auto cell = row.begin(); cell != row.end(); ++cell)
          std::cout << '\t' << cell.key() << '='
                    << (cell.value().is_string()
                            ? cell.value().get<std::string>()
                            : cell.value().dump());
        std::cout << '\n';
      }
      continue;
    }
    std::cout << it.key() << '\t'
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
  }
  std::cout.flush();
}

json set_list(std::uint64_t mask, int ground) {
  json arr = json::array();
  for (int e = 1; e <= ground; ++e)
    if ((mask >> (e - 1)) & 1u) arr.push_back(e);
  return arr;
}

std::string set_text(std::uint64_t mask, int ground) {
  return Subset(ground, mask).to_string();
}

std::string word_text(const Word& word, int k) {
  std::string out;
  for (const Letter& letter : word)
    out += letter.end ? "E" : set_text(letter.mask, k);
  return out;
}

json ratio_json(const BigRat& r) {
  json doc;
  doc["fraction"] = r.to_fraction_string();
  doc["decimal"] = r.to_decimal_string();
  return doc;
}

std::string ratio_text(const BigRat& r) {
  return r.to_fraction_string() + " (" + r.to_decimal_string() + ")";
}

json family_json(const Family& f) {
  json doc;
  doc["n"] = f.ground();
  json sets = json::array();
  for (std::uint64_t m : f.masks()) sets.push_back(set_list(m, f.ground()));
  doc["sets"] = sets;
  return doc;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write to " + path);
  out << text << '\n';
}

std::vector<std::string> split_commas(const std::string& joined) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= joined.size()) {
    const std::size_t comma = joined.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(joined.substr(start));
      break;
    }
    out.push_back(joined.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

// --- subcommand bodies -----------------------------------------------------

int cmd_closure(const CliOptions& opts, const std::string& family_path,
                const std::string& out_path) {
  Family f = read_family_file(family_path);
  Family closed = closure(f, opts.config);
  json doc = family_json(closed);
  doc["convex"] = (closed == f);
  if (!out_path.empty()) {
    write_output(out_path, doc.dump(2));
    return 0;
  }
  emit(opts, doc);
  return 0;
}

int cmd_convex(const CliOptions& opts, const std::string& family_path) {
  Family f = read_family_file(family_path);
  json doc;
  doc["n"] = f.ground();
  doc["convex"] = is_convex(f, opts.config);
  emit(opts, doc);
  return 0;
}

int cmd_unrelated(const CliOptions& opts, const std::string& a_path,
                  const std::string& b_path) {
  Family a = read_family_file(a_path);
  Family b = read_family_file(b_path);
  json doc;
  doc["unrelated"] = unrelated(a, b);
  emit(opts, doc);
  return 0;
}

int cmd_chains(const CliOptions& opts, const std::string& family_path,
               bool with_oracle) {
  Family f = read_family_file(family_path);
  const BigNat count = chains_through(f, opts.config);
  json doc;
  doc["n"] = f.ground();
  doc["count"] = count.to_string();
  if (with_oracle) {
    const BigNat check = chains_through_oracle(f, opts.config);
    doc["oracle"] = check.to_string();
    doc["agree"] = (check == count);
    emit(opts, doc);
    return check == count ? 0 : 4;
  }
  emit(opts, doc);
  return 0;
}

int cmd_abar(const CliOptions& opts, int m, int n) {
  AbarResult result = abar_bruteforce(m, n, opts.config);
  json doc;
  doc["m"] = m;
  doc["n"] = n;
  doc["min_chains"] = result.min_chains.to_string();
  doc["witness"] = family_json(result.witness);
  if (!opts.json_output) {
    std::string sets;
    for (std::uint64_t mask : result.witness.masks()) {
      if (!sets.empty()) sets += " ";
      sets += set_text(mask, n);
    }
    json flat;
    flat["m"] = m;
    flat["n"] = n;
    flat["min_chains"] = result.min_chains.to_string();
    flat["witness"] = sets;
    emit(opts, flat);
    return 0;
  }
  emit(opts, doc);
  return 0;
}

int cmd_cp(const CliOptions& opts, const std::string& poset_path, bool strong,
           int kmax) {
  Poset p = read_poset_file(poset_path, opts.config.poset_cap);
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  ClosureCertificate cert = minimal_closure(p, mode, kmax, opts.config);
  if (opts.json_output) {
    std::cout << json::parse(certificate_to_json(cert)).dump(2) << std::endl;
    return 0;
  }
  json doc;
  doc["m"] = cert.m;
  doc["k"] = cert.k;
  doc["mode"] = mode_name(mode);
  doc["exhaustive_to"] = cert.exhaustive_to;
  std::string witness;
  for (std::uint64_t mask : cert.witness.image) {
    if (!witness.empty()) witness += " ";
    witness += set_text(mask, cert.k);
  }
  doc["witness"] = witness;
  emit(opts, doc);
  return 0;
}

json layer_rows(const PackingPlan& plan) {
  json rows = json::array();
  const int k = plan.embedding.k;
  for (const LayerSpec& layer : plan.layers) {
    json row;
    row["j"] = layer.j;
    row["R"] = layer.restriction;
    row["b"] = layer.base_rank;
    row["word"] = word_text(layer.word, k);
    row["copies"] =
        BigNat::binomial(
            static_cast<std::uint64_t>(plan.n - k * (layer.j + 1)),
            static_cast<std::uint64_t>(layer.base_rank - layer.restriction_size()))
            .to_string();
    rows.push_back(row);
  }
  return rows;
}

int cmd_construct(const CliOptions& opts, const std::string& poset_path, int n,
                  int iters, bool strong, bool count_only, int kmax,
                  const std::string& out_path) {
  Poset p = read_poset_file(poset_path, opts.config.poset_cap);
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  ClosureCertificate cert = minimal_closure(p, mode, kmax, opts.config);
  PackingPlan plan = build_plan(cert.witness, n, iters, opts.config);
  CopyCount counted = count_copies(plan);

  if (count_only) {
    json doc;
    doc["n"] = n;
    doc["iterations"] = iters;
    doc["mode"] = mode_name(mode);
    doc["m"] = cert.m;
    doc["k"] = cert.k;
    doc["layers"] = layer_rows(plan);
    doc["copies"] = counted.copies.to_string();
    doc["family_size"] = counted.family_size.to_string();
    emit(opts, doc);
    return 0;
  }

  auto copies = materialize(plan, opts.config);
  write_output(out_path, copies_to_json(copies, plan));
  return 0;
}

int cmd_verify(const CliOptions& opts, const std::string& copies_path,
               const std::string& poset_path, bool strong, int kmax) {
  std::vector<Family> copies = read_copies_file(copies_path);
  VerifyReport report;
  if (poset_path.empty()) {
    report = verify_unrelated(copies);
  } else {
    // Recompute the canonical witness the construct command used, so the
    // per-copy pattern check applies as well.
    Poset p = read_poset_file(poset_path, opts.config.poset_cap);
    const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
    ClosureCertificate cert = minimal_closure(p, mode, kmax, opts.config);
    const Family image = cert.witness.image_family();
    report = verify_unrelated(copies);
    if (report.pass) {
      std::vector<PackedCopy> tagged;
      tagged.reserve(copies.size());
      for (Family& f : copies) tagged.push_back(PackedCopy{std::move(f), 0});
      PackingPlan probe;
      probe.n = tagged.empty() ? 0 : tagged.front().family.ground();
      probe.embedding = cert.witness;
      probe.closure_m = cert.m;
      probe.iterations = 1;
      report = verify_copies(tagged, probe);
    }
  }
  json doc;
  doc["pass"] = report.pass;
  doc["copies"] = copies.size();
  if (!report.pass) {
    doc["failure"] = report.message;
    if (report.copy_a) doc["copy_a"] = *report.copy_a;
    if (report.copy_b) doc["copy_b"] = *report.copy_b;
    if (report.bad_pattern_copy) doc["bad_pattern_copy"] = *report.bad_pattern_copy;
  }
  emit(opts, doc);
  return report.pass ? 0 : 4;
}

int cmd_oracle_pa(const CliOptions& opts, const std::string& poset_path, int n,
                  bool strong) {
  Poset p = read_poset_file(poset_path, opts.config.poset_cap);
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  PaResult result = pa_exact(p, n, mode, opts.config);
  json doc;
  doc["n"] = n;
  doc["mode"] = mode_name(mode);
  doc["pa"] = result.family_size;
  doc["copies"] = result.witness.size();
  if (opts.json_output) {
    json witness = json::array();
    for (const Family& f : result.witness) witness.push_back(family_json(f));
    doc["witness"] = witness;
  }
  emit(opts, doc);
  return 0;
}

int cmd_oracle_pa_collection(const CliOptions& opts,
                             const std::string& poset_paths, int n,
                             bool strong) {
  std::vector<Poset> posets;
  for (const std::string& path : split_commas(poset_paths))
    posets.push_back(read_poset_file(path, opts.config.poset_cap));
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  json doc;
  doc["n"] = n;
  doc["mode"] = mode_name(mode);
  doc["pa"] = pa_exact_collection(posets, n, mode, opts.config);
  emit(opts, doc);
  return 0;
}

int cmd_gst(const CliOptions& opts, int k, int n) {
  json doc;
  doc["k"] = k;
  doc["n"] = n;
  doc["value"] = gst_formula(k, n).to_string();
  emit(opts, doc);
  return 0;
}

int cmd_best_ratio(const CliOptions& opts, const std::string& poset_paths,
                   bool strong) {
  std::vector<Poset> posets;
  for (const std::string& path : split_commas(poset_paths))
    posets.push_back(read_poset_file(path, opts.config.poset_cap));
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  RatioResult result = best_ratio(posets, mode, opts.config);
  json doc;
  doc["mode"] = mode_name(mode);
  doc["index"] = result.index;
  if (opts.json_output)
    doc["ratio"] = ratio_json(result.ratio);
  else
    doc["ratio"] = ratio_text(result.ratio);
  emit(opts, doc);
  return 0;
}

int cmd_report(const CliOptions& opts, const std::string& poset_path, int n,
               int iters, bool strong, int kmax) {
  Poset p = read_poset_file(poset_path, opts.config.poset_cap);
  const EmbedMode mode = strong ? EmbedMode::Strong : EmbedMode::Weak;
  ClosureCertificate cert = minimal_closure(p, mode, kmax, opts.config);
  PackingPlan plan = build_plan(cert.witness, n, iters, opts.config);
  CopyCount counted = count_copies(plan);

  const BigNat middle = BigNat::binomial(static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(n / 2));
  const BigNat p_size{static_cast<std::uint64_t>(p.size())};
  const BigNat m{static_cast<std::uint64_t>(cert.m)};

  // (|P|/m) C(n, n/2)
  const BigRat asymptotic_target(p_size * middle, m);
  // |P| sum_{j<i} (2^k-m)^j / (2^k)^{j+1} C(n, n/2)
  const BigNat two_k = BigNat::pow(BigNat{2}, static_cast<unsigned>(cert.k));
  const BigNat hole = two_k - m;
  BigNat partial_num;
  for (int j = 0; j < iters; ++j)
    partial_num += BigNat::pow(hole, static_cast<unsigned>(j)) *
                   BigNat::pow(two_k, static_cast<unsigned>(iters - 1 - j));
  const BigRat partial_target(
      p_size * partial_num * middle,
      BigNat::pow(two_k, static_cast<unsigned>(iters)));

  const BigRat achieved(counted.family_size, BigNat{1});
  const BigRat vs_asymptotic = achieved / asymptotic_target;
  const BigRat vs_partial = achieved / partial_target;

  json doc;
  doc["poset_size"] = p.size();
  doc["mode"] = mode_name(mode);
  doc["m"] = cert.m;
  doc["k"] = cert.k;
  doc["exhaustive_to"] = cert.exhaustive_to;
  doc["n"] = n;
  doc["iterations"] = iters;
  doc["layers"] = layer_rows(plan);
  doc["copies"] = counted.copies.to_string();
  doc["family_size"] = counted.family_size.to_string();
  doc["middle_binomial"] = middle.to_string();
  if (opts.json_output) {
    doc["asymptotic_target"] = ratio_json(asymptotic_target);
    doc["partial_target"] = ratio_json(partial_target);
    doc["achieved_vs_asymptotic"] = ratio_json(vs_asymptotic);
    doc["achieved_vs_partial"] = ratio_json(vs_partial);
  } else {
    doc["asymptotic_target"] = ratio_text(asymptotic_target);
    doc["partial_target"] = ratio_text(partial_target);
    doc["achieved_vs_asymptotic"] = ratio_text(vs_asymptotic);
    doc["achieved_vs_partial"] = ratio_text(vs_partial);
  }
  emit(opts, doc);
  return 0;
}

int cmd_selftest(const CliOptions& opts, std::uint64_t seed) {
  auto results = run_selftest(seed, opts.config);
  bool all_pass = true;
  json rows = json::array();
  for (const SuiteResult& suite : results) {
    all_pass = all_pass && suite.pass;
    json row;
    row["suite"] = suite.name;
    row["pass"] = suite.pass;
    row["detail"] = suite.detail;
    rows.push_back(row);
  }
  json doc;
  doc["seed"] = seed;
  doc["suites"] = rows;
  doc["pass"] = all_pass;
  emit(opts, doc);
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset packings in the Boolean lattice: closures, chain "
               "counts, layered constructions and exact small-case oracles"};
  app.require_subcommand(1);

  CliOptions opts;
  std::uint64_t budget = 0;
  bool budget_set = false;
  if (const char* env = std::getenv("POSETPACK_BUDGET")) {
    budget = std::strtoull(env, nullptr, 10);
    budget_set = true;
  }

  app.add_flag("--json", opts.json_output, "emit JSON instead of TSV");
  bool tsv_flag = false;
  app.add_flag("--tsv", tsv_flag, "emit TSV (the default)");
  CLI::Option* budget_opt =
      app.add_option("--budget", budget,
                     "search/materialization/catalog budget (overrides "
                     "POSETPACK_BUDGET)");
  app.add_option("--workers", opts.config.workers, "worker threads");

  // subcommand wiring
  std::string family_path, other_path, out_path, poset_path, poset_list,
      copies_path;
  int m = 1, n = 0, k = 0, iters = 1, kmax = -1;
  bool strong = false, with_oracle = false, count_only = false;
  std::uint64_t seed = 0;

  CLI::App* closure_cmd = app.add_subcommand("closure", "closure of a family");
  closure_cmd->add_option("--family", family_path, "family JSON file")
      ->required();
  closure_cmd->add_option("--out", out_path, "write the closure here");

  CLI::App* convex_cmd = app.add_subcommand("convex", "is the family convex");
  convex_cmd->add_option("--family", family_path)->required();

  CLI::App* unrelated_cmd =
      app.add_subcommand("unrelated", "are two families unrelated");
  unrelated_cmd->add_option("--a", family_path)->required();
  unrelated_cmd->add_option("--b", other_path)->required();

  CLI::App* chains_cmd =
      app.add_subcommand("chains", "full chains meeting a family");
  chains_cmd->add_option("--family", family_path)->required();
  chains_cmd->add_flag("--oracle", with_oracle, "cross-check against the DP");

  CLI::App* abar_cmd =
      app.add_subcommand("abar", "minimum chains meeting any m-set family");
  abar_cmd->add_option("--m", m)->required();
  abar_cmd->add_option("--n", n)->required();

  CLI::App* cp_cmd =
      app.add_subcommand("cp", "minimal convex closure c(P) or c*(P)");
  cp_cmd->add_option("--poset", poset_path)->required();
  cp_cmd->add_flag("--strong", strong);
  cp_cmd->add_option("--kmax", kmax, "largest target ground size");

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build the layered packing");
  construct_cmd->add_option("--poset", poset_path)->required();
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--iters", iters)->required();
  construct_cmd->add_flag("--strong", strong);
  construct_cmd->add_flag("--count-only", count_only);
  construct_cmd->add_option("--kmax", kmax);
  construct_cmd->add_option("--out", out_path, "write copies here");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a materialized packing");
  verify_cmd->add_option("--copies", copies_path)->required();
  verify_cmd->add_option("--poset", poset_path,
                         "also check copy patterns against this poset");
  verify_cmd->add_flag("--strong", strong);
  verify_cmd->add_option("--kmax", kmax);

  CLI::App* pa_cmd = app.add_subcommand("oracle-pa", "exact pa(n,P)");
  pa_cmd->add_option("--poset", poset_path)->required();
  pa_cmd->add_option("--n", n)->required();
  pa_cmd->add_flag("--strong", strong);

  CLI::App* pac_cmd =
      app.add_subcommand("oracle-pa-collection", "exact pa over a collection");
  pac_cmd->add_option("--posets", poset_list, "comma-separated files")
      ->required();
  pac_cmd->add_option("--n", n)->required();
  pac_cmd->add_flag("--strong", strong);

  CLI::App* gst_cmd =
      app.add_subcommand("gst", "chain packing closed form");
  gst_cmd->add_option("--k", k)->required();
  gst_cmd->add_option("--n", n)->required();

  CLI::App* ratio_cmd =
      app.add_subcommand("best-ratio", "max |P|/c(P) over a collection");
  ratio_cmd->add_option("--posets", poset_list)->required();
  ratio_cmd->add_flag("--strong", strong);

  CLI::App* report_cmd = app.add_subcommand(
      "report", "construction counts against asymptotic targets");
  report_cmd->add_option("--poset", poset_path)->required();
  report_cmd->add_option("--n", n)->required();
  report_cmd->add_option("--iters", iters)->required();
  report_cmd->add_flag("--strong", strong);
  report_cmd->add_option("--kmax", kmax);

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the invariant suites");
  selftest_cmd->add_option("--seed", seed);

  // --json/--budget/--workers may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (budget_opt->count() > 0 || budget_set) {
    opts.config.search_budget = budget;
    opts.config.materialize_budget = budget;
    opts.config.copy_budget = budget;
  }

  try {
    if (closure_cmd->parsed()) return cmd_closure(opts, family_path, out_path);
    if (convex_cmd->parsed()) return cmd_convex(opts, family_path);
    if (unrelated_cmd->parsed())
      return cmd_unrelated(opts, family_path, other_path);
    if (chains_cmd->parsed()) return cmd_chains(opts, family_path, with_oracle);
    if (abar_cmd->parsed()) return cmd_abar(opts, m, n);
    if (cp_cmd->parsed()) return cmd_cp(opts, poset_path, strong, kmax);
    if (construct_cmd->parsed())
      return cmd_construct(opts, poset_path, n, iters, strong, count_only,
                           kmax, out_path);
    if (verify_cmd->parsed())
      return cmd_verify(opts, copies_path, poset_path, strong, kmax);
    if (pa_cmd->parsed()) return cmd_oracle_pa(opts, poset_path, n, strong);
    if (pac_cmd->parsed())
      return cmd_oracle_pa_collection(opts, poset_list, n, strong);
    if (gst_cmd->parsed()) return cmd_gst(opts, k, n);
    if (ratio_cmd->parsed()) return cmd_best_ratio(opts, poset_list, strong);
    if (report_cmd->parsed())
      return cmd_report(opts, poset_path, n, iters, strong, kmax);
    if (selftest_cmd->parsed()) return cmd_selftest(opts, seed);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return static_cast<int>(err.error_class());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << std::endl;
    return 1;
  }
  return 0;
}
