#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posetpack/embedding.hpp"
#include "posetpack/lattice.hpp"
#include "posetpack/packing.hpp"
#include "posetpack/poset.hpp"

namespace posetpack {

// File formats. Posets: {"elements": p, "relations": [[a,b], ...]} with
// 0-based labels. Families: {"n": n, "sets": [[1,3],[2], ...]} with 1-based,
// strictly increasing element lists. Materialized plans: a JSON array of
// family objects, each tagged with its layer triple.

Poset read_poset(std::istream& in, int size_cap = kDefaultPosetSizeCap);
Poset read_poset_file(const std::string& path,
                      int size_cap = kDefaultPosetSizeCap);
std::string poset_to_json(const Poset& poset);

Family read_family(std::istream& in);
Family read_family_file(const std::string& path);
std::string family_to_json(const Family& family);

std::string certificate_to_json(const ClosureCertificate& cert);

std::string copies_to_json(const std::vector<PackedCopy>& copies,
                           const PackingPlan& plan);

// Reads a materialized-copies file back; layer tags are ignored.
std::vector<Family> read_copies(std::istream& in);
std::vector<Family> read_copies_file(const std::string& path);

}  // namespace posetpack
