#include "posetpack/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posetpack/errors.hpp"

namespace posetpack {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what());
  }
}

json require_field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path);
  return in;
}

std::uint64_t set_list_to_mask(const json& arr, int ground) {
  if (!arr.is_array()) throw ParseError("set must be a list of elements");
  std::uint64_t mask = 0;
  long long prev = 0;
  for (const json& item : arr) {
    if (!item.is_number_integer())
      throw ParseError("set elements must be integers");
    const long long e = item.get<long long>();
    if (e < 1 || e > ground)
      throw ParseError("set element " + std::to_string(e) +
                       " outside ground set [" + std::to_string(ground) + "]");
    if (e <= prev)
      throw ParseError("set elements must be strictly increasing");
    prev = e;
    mask |= std::uint64_t{1} << (e - 1);
  }
  return mask;
}

json mask_to_set_list(std::uint64_t mask, int ground) {
  json arr = json::array();
  for (int e = 1; e <= ground; ++e)
    if ((mask >> (e - 1)) & 1u) arr.push_back(e);
  return arr;
}

Family family_from_json(const json& doc) {
  const json n_field = require_field(doc, "n");
  if (!n_field.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const long long n = n_field.get<long long>();
  if (n < 0 || n > 63) throw ParseError("family ground size must be in [0,63]");
  const json sets = require_field(doc, "sets");
  if (!sets.is_array()) throw ParseError("\"sets\" must be a list");
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const json& s : sets)
    masks.push_back(set_list_to_mask(s, static_cast<int>(n)));
  return Family(static_cast<int>(n), std::move(masks));
}

json family_to_json_obj(const Family& family) {
  json doc;
  doc["n"] = family.ground();
  json sets = json::array();
  for (std::uint64_t m : family.masks())
    sets.push_back(mask_to_set_list(m, family.ground()));
  doc["sets"] = sets;
  return doc;
}

json word_to_json(const Word& word, int k) {
  json out = json::array();
  for (const Letter& letter : word) {
    if (letter.end)
      out.push_back("E");
    else
      out.push_back(mask_to_set_list(letter.mask, k));
  }
  return out;
}

}  // namespace

Poset read_poset(std::istream& in, int size_cap) {
  const json doc = parse_stream(in);
  const json elements = require_field(doc, "elements");
  if (!elements.is_number_integer())
    throw ParseError("\"elements\" must be an integer");
  const long long p = elements.get<long long>();
  if (p < 1 || p > 64) throw ParseError("\"elements\" out of range");
  const json rels = require_field(doc, "relations");
  if (!rels.is_array()) throw ParseError("\"relations\" must be a list");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(rels.size());
  for (const json& r : rels) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
        !r[1].is_number_integer())
      throw ParseError("each relation must be a pair [a,b]");
    pairs.emplace_back(r[0].get<int>(), r[1].get<int>());
  }
  return Poset::build(static_cast<int>(p), pairs, size_cap);
}

Poset read_poset_file(const std::string& path, int size_cap) {
  std::ifstream in = open_file(path);
  return read_poset(in, size_cap);
}

std::string poset_to_json(const Poset& poset) {
  json doc;
  doc["elements"] = poset.size();
  json rels = json::array();
  for (auto [a, b] : poset.covers()) rels.push_back(json::array({a, b}));
  doc["relations"] = rels;
  return doc.dump();
}

Family read_family(std::istream& in) { return family_from_json(parse_stream(in)); }

Family read_family_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_family(in);
}

std::string family_to_json(const Family& family) {
  return family_to_json_obj(family).dump();
}

std::string certificate_to_json(const ClosureCertificate& cert) {
  json doc;
  doc["m"] = cert.m;
  doc["k"] = cert.k;
  doc["mode"] = cert.mode == EmbedMode::Weak ? "weak" : "strong";
  doc["exhaustive_to"] = cert.exhaustive_to;
  json witness = json::array();
  for (std::uint64_t mask : cert.witness.image)
    witness.push_back(mask_to_set_list(mask, cert.k));
  doc["witness"] = witness;
  return doc.dump();
}

std::string copies_to_json(const std::vector<PackedCopy>& copies,
                           const PackingPlan& plan) {
  json out = json::array();
  const int k = plan.embedding.k;
  for (const PackedCopy& copy : copies) {
    json doc = family_to_json_obj(copy.family);
    const LayerSpec& layer = plan.layers[copy.layer_index];
    json tag;
    tag["j"] = layer.j;
    tag["R"] = layer.restriction;
    tag["b"] = layer.base_rank;
    tag["word"] = word_to_json(layer.word, k);
    doc["layer"] = tag;
    out.push_back(doc);
  }
  return out.dump();
}

std::vector<Family> read_copies(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_array()) throw ParseError("copies file must be a JSON array");
  std::vector<Family> out;
  out.reserve(doc.size());
  for (const json& item : doc) out.push_back(family_from_json(item));
  return out;
}

std::vector<Family> read_copies_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_copies(in);
}

}  // namespace posetpack
