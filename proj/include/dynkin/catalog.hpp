#pragma once

// Catalog entries: one per isomorphism class of hyperbolic diagram, with the
// invariants computed once at enumeration time.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/canonical.hpp"
#include "dynkin/classify.hpp"
#include "dynkin/enumerate.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/symmetrize.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin {

/// Whether the skeleton partition is claimed to be the Weyl-orbit partition.
/// Only symmetrizable matrices get that claim.
enum class OrbitSemantics { Verified, Unverified };

inline const char* to_string(OrbitSemantics s) {
  return s == OrbitSemantics::Verified ? "verified" : "unverified";
}

struct CatalogEntry {
  std::string canonical_id;
  std::size_t rank = 0;
  Gcm matrix = Gcm::identity(1);
  bool compact = false;
  bool symmetrizable = false;
  std::optional<Symmetrization> symmetrizer;
  std::optional<std::size_t> root_lengths;
  OrbitPartition orbit_blocks;
  OrbitSemantics orbit_semantics = OrbitSemantics::Unverified;
  std::string dual_id;

  bool operator==(const CatalogEntry&) const = default;
};

/// "<rank>-<ordinal>", ordinal 1-based within the rank, zero-padded to 3.
inline std::string make_canonical_id(std::size_t rank, std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu-%03zu", rank, ordinal);
  return buf;
}

/// Entry for one hyperbolic matrix, without id fields.
inline CatalogEntry describe_hyperbolic(const Gcm& m) {
  CatalogEntry e;
  e.rank = m.rank();
  e.matrix = m;
  e.compact = SubdiagramTypes(m).compact_hyperbolic();
  e.symmetrizable = is_symmetrizable(m).symmetrizable;
  if (e.symmetrizable) {
    e.symmetrizer = symmetrizer(m);
    e.root_lengths = e.symmetrizer->distinct_values();
  }
  e.orbit_blocks = orbit_partition(m);
  e.orbit_semantics = e.symmetrizable ? OrbitSemantics::Verified : OrbitSemantics::Unverified;
  return e;
}

/// Builds entries from canonical hyperbolic matrices sorted by (rank, entries).
/// Every transpose must also be present (whole ranks are closed under duality).
inline std::vector<CatalogEntry> build_catalog(const std::vector<Gcm>& matrices) {
  std::vector<CatalogEntry> out;
  std::map<Gcm, std::string> ids;
  std::map<std::size_t, std::size_t> ordinal;
  for (const auto& m : matrices) {
    auto e = describe_hyperbolic(m);
    e.canonical_id = make_canonical_id(m.rank(), ++ordinal[m.rank()]);
    ids.emplace(m, e.canonical_id);
    out.push_back(std::move(e));
  }
  for (auto& e : out) {
    const auto it = ids.find(canonical_matrix(dual(e.matrix)));
    if (it == ids.end()) throw std::logic_error("build_catalog: dual of " + e.canonical_id + " missing");
    e.dual_id = it->second;
  }
  return out;
}

inline std::vector<CatalogEntry> enumerate_hyperbolic(std::size_t rank_min, std::size_t rank_max,
                                                      const EnumerationOptions& opts = {}) {
  return build_catalog(enumerate_hyperbolic_matrices(rank_min, rank_max, opts));
}

struct CatalogSummary {
  std::size_t total = 0;
  std::size_t symmetrizable = 0;
  std::map<std::size_t, std::size_t> per_rank;
};

inline CatalogSummary summarize(const std::vector<CatalogEntry>& entries) {
  CatalogSummary s;
  for (const auto& e : entries) {
    ++s.total;
    if (e.symmetrizable) ++s.symmetrizable;
    ++s.per_rank[e.rank];
  }
  return s;
}

}  // namespace dynkin
