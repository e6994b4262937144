#pragma once

// Property harness over a hyperbolic catalog. Each check reports pass/fail
// with counterexample ids; nothing here throws on a failed property.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dynkin/canonical.hpp"
#include "dynkin/catalog.hpp"
#include "dynkin/classify.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/symmetrize.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "FAIL";
}

struct PropertyResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<std::string> counterexamples;
};

struct VerificationReport {
  std::vector<PropertyResult> properties;

  bool passed() const {
    return std::none_of(properties.begin(), properties.end(),
                        [](const PropertyResult& p) { return p.status == CheckStatus::Fail; });
  }
  const PropertyResult* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }
};

inline void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& p : r.properties) {
    out << to_string(p.status) << ' ' << p.name;
    if (!p.detail.empty()) out << ": " << p.detail;
    if (!p.counterexamples.empty()) {
      out << " [";
      const std::size_t shown = std::min<std::size_t>(p.counterexamples.size(), 10);
      for (std::size_t k = 0; k < shown; ++k) out << (k ? " " : "") << p.counterexamples[k];
      if (shown < p.counterexamples.size()) out << " ... +" << p.counterexamples.size() - shown;
      out << ']';
    }
    out << '\n';
  }
}

struct VerifyOptions {
  /// Starting height window for the reflection-orbit oracle.
  int orbit_height = 8;
  /// Largest window tried after doubling on a mismatch.
  int orbit_height_limit = 64;
  /// Entries up to this rank go through the reflection-orbit oracle.
  std::size_t orbit_oracle_max_rank = 5;
  /// Random GCMs (ranks 4-6) for the symmetrizability equivalence check; 0 skips it.
  std::size_t random_samples = 0;
  std::uint64_t seed = 1;
};

/// Expected hyperbolic counts per rank for ranks 3..10.
inline const std::map<std::size_t, std::size_t>& expected_rank_counts() {
  static const std::map<std::size_t, std::size_t> counts{{3, 123}, {4, 53}, {5, 22}, {6, 22},
                                                         {7, 4},   {8, 5},  {9, 5},  {10, 4}};
  return counts;
}
inline constexpr std::size_t kExpectedTotal = 238;
inline constexpr std::size_t kExpectedSymmetrizable = 142;

/// Random GCM with off-diagonal entries in [-4, 0], each pair independently
/// absent with probability 1/3.
inline Gcm random_gcm(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> present(0, 2), entry(1, 4);
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    m[i][i] = 2;
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (present(rng) == 0) continue;
      m[i][j] = -entry(rng);
      m[j][i] = -entry(rng);
    }
  }
  return Gcm::from_rows(m);
}

struct EquivalenceResult {
  std::size_t checked = 0;
  std::vector<Gcm> mismatches;
};

/// Balanced-cycle test vs Kac's cycle products over every rank-3 GCM with
/// entries >= -4.
inline EquivalenceResult symmetrizability_equivalence_rank3() {
  EquivalenceResult r;
  std::vector<EdgeLabel> options{{0, 0}};
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) options.push_back({p, q});
  for (const auto& e01 : options)
    for (const auto& e02 : options)
      for (const auto& e12 : options) {
        const auto m = Gcm::from_rows({{2, -e01.p, -e02.p}, {-e01.q, 2, -e12.p}, {-e02.q, -e12.q, 2}});
        ++r.checked;
        if (is_symmetrizable(m).symmetrizable != kac_cycle_oracle(m)) r.mismatches.push_back(m);
      }
  return r;
}

/// The same comparison on seeded random GCMs of ranks 4-6.
inline EquivalenceResult symmetrizability_equivalence_random(std::size_t samples, std::uint64_t seed) {
  EquivalenceResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> rank_dist(4, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto m = random_gcm(rng, rank_dist(rng));
    ++r.checked;
    if (is_symmetrizable(m).symmetrizable != kac_cycle_oracle(m)) r.mismatches.push_back(m);
  }
  return r;
}

/// Skeleton partition vs reflection reachability, doubling the window on a
/// mismatch up to height_limit. Returns the window that matched, if any.
inline std::optional<int> orbit_oracle_agrees(const Gcm& m, int height, int height_limit) {
  const auto skeleton = orbit_partition(m);
  for (int h = height; h <= height_limit; h *= 2)
    if (orbit_partition_bruteforce(m, h) == skeleton) return h;
  return std::nullopt;
}

namespace detail {

struct PairInfo {
  bool any_product4 = false;   // some 2-vertex subdiagram is affine
  bool all_product_le3 = true; // every 2-vertex subdiagram is finite
};

inline PairInfo pair_info(const Gcm& m) {
  PairInfo info;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      const int prod = m(i, j) * m(j, i);
      if (prod == 4) info.any_product4 = true;
      if (prod > 3) info.all_product_le3 = false;
    }
  return info;
}

inline bool is_single_arrow2_cycle(const Gcm& m) {
  const auto d = matrix_to_diagram(m);
  if (d.edges().size() != m.rank() || !is_indecomposable(m)) return false;
  std::vector<int> degree(m.rank(), 0);
  std::size_t arrow2 = 0, single = 0;
  for (const auto& e : d.edges()) {
    ++degree[e.i];
    ++degree[e.j];
    if (e.label.render_class() == RenderClass::Arrow2) ++arrow2;
    if (e.label.render_class() == RenderClass::Single) ++single;
  }
  return std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; }) && arrow2 == 1 &&
         single + 1 == d.edges().size();
}

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  void fail(const std::string& id) {
    r_.status = CheckStatus::Fail;
    r_.counterexamples.push_back(id);
  }
  void require(bool ok, const std::string& id) {
    if (!ok) fail(id);
  }
  void detail(std::string d) { r_.detail = std::move(d); }
  void skip(std::string why) {
    r_.status = CheckStatus::Skip;
    r_.detail = std::move(why);
  }
  bool failed() const { return r_.status == CheckStatus::Fail; }
  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

}  // namespace detail

inline VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& opts = {}) {
  using detail::Check;
  VerificationReport report;
  auto& out = report.properties;

  // Recomputed per-entry facts; indecomposable entries only.
  struct Facts {
    bool connected = false;
    std::optional<SubdiagramTypes> types;
  };
  std::vector<Facts> facts(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& m = entries[k].matrix;
    facts[k].connected = is_indecomposable(m);
    if (facts[k].connected && m.rank() <= kMaxMinorRank) facts[k].types.emplace(m);
  }
  std::map<std::string, std::size_t> by_id;
  for (std::size_t k = 0; k < entries.size(); ++k) by_id.emplace(entries[k].canonical_id, k);

  {
    Check c("rank_bound");
    for (const auto& e : entries) c.require(e.rank >= 3 && e.rank <= 10, e.canonical_id);
    c.detail("every entry has rank in [3, 10]");
    out.push_back(c.done());
  }
  {
    Check c("entries_hyperbolic");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& t = facts[k].types;
      c.require(entries[k].rank == entries[k].matrix.rank() && t && t->hyperbolic() &&
                    t->compact_hyperbolic() == entries[k].compact,
                entries[k].canonical_id);
    }
    c.detail("each matrix is hyperbolic and its compact flag is correct");
    out.push_back(c.done());
  }
  {
    Check c("canonical_unique");
    std::set<Gcm> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      bool ok = e.matrix.rank() <= 12 && canonical_matrix(e.matrix) == e.matrix && seen.insert(e.matrix).second &&
                by_id.at(e.canonical_id) == k;
      if (k > 0) ok = ok && entries[k - 1].matrix < e.matrix;
      c.require(ok, e.canonical_id);
    }
    c.detail("matrices canonical, sorted, pairwise non-isomorphic; ids unique");
    out.push_back(c.done());
  }
  {
    Check c("catalog_counts");
    const auto s = summarize(entries);
    std::string split;
    for (const auto& [rank, n] : s.per_rank) split += (split.empty() ? "" : ",") + std::to_string(n);
    c.detail("total=" + std::to_string(s.total) + " symmetrizable=" + std::to_string(s.symmetrizable) +
             " per-rank=(" + split + ")");
    if (s.total != kExpectedTotal) c.fail("total");
    if (s.symmetrizable != kExpectedSymmetrizable) c.fail("symmetrizable");
    if (s.per_rank != expected_rank_counts()) c.fail("per-rank");
    out.push_back(c.done());
  }
  {
    Check c("compact_bounds");
    std::size_t max_compact = 0, max_compact_sym = 0;
    std::vector<const CatalogEntry*> rank5;
    for (const auto& e : entries) {
      if (!e.compact) continue;
      max_compact = std::max(max_compact, e.rank);
      if (e.symmetrizable) max_compact_sym = std::max(max_compact_sym, e.rank);
      if (e.rank == 5) rank5.push_back(&e);
    }
    if (max_compact != 5) c.fail("max-compact-rank");
    if (max_compact_sym != 4) c.fail("max-compact-symmetrizable-rank");
    if (rank5.size() != 1) c.fail("rank5-compact-count");
    for (auto* e : rank5)
      c.require(!e->symmetrizable && detail::is_single_arrow2_cycle(e->matrix), e->canonical_id);
    c.detail("max compact rank " + std::to_string(max_compact) + ", max compact symmetrizable rank " +
             std::to_string(max_compact_sym) + ", rank-5 compact entries " + std::to_string(rank5.size()));
    out.push_back(c.done());
  }
  {
    Check c("high_rank_symmetrizable");
    for (const auto& e : entries)
      if (e.rank >= 7) c.require(e.symmetrizable, e.canonical_id);
    c.detail("every entry of rank 7-10 is symmetrizable");
    out.push_back(c.done());
  }
  {
    Check c("affine_pair_iff_rank3_noncompact");
    for (const auto& e : entries) {
      if (!e.symmetrizable) continue;
      const bool has_affine_pair = detail::pair_info(e.matrix).any_product4;
      c.require(has_affine_pair == (e.rank == 3 && !e.compact), e.canonical_id);
    }
    c.detail("symmetrizable: a 2-vertex affine subdiagram exists iff rank 3 and non-compact");
    out.push_back(c.done());
  }
  {
    Check c("rank3_affine_pair_forms");
    const auto a11 = canonical_matrix(Gcm::from_rows({{2, -2}, {-2, 2}}));
    const auto a22 = canonical_matrix(Gcm::from_rows({{2, -1}, {-4, 2}}));
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (!e.symmetrizable || e.rank != 3 || e.compact) continue;
      bool named = false, product4 = false;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
          const std::size_t idx[] = {i, j};
          const auto sub = canonical_matrix(induced_subdiagram(e.matrix, idx));
          if (sub == a11 || sub == a22) named = true;
          if (sub(0, 1) != 0 && kind_of(sub) == CartanKind::Affine && sub(0, 1) * sub(1, 0) == 4) product4 = true;
        }
      c.require(named && product4, e.canonical_id);
    }
    c.detail("rank-3 symmetrizable non-compact: A1(1)/A2(2) subdiagram and a product-4 affine pair both present");
    out.push_back(c.done());
  }
  {
    Check c("rank2_subdiagrams_finite_from_rank4");
    for (const auto& e : entries)
      if (e.symmetrizable && e.rank >= 4) c.require(detail::pair_info(e.matrix).all_product_le3, e.canonical_id);
    c.detail("symmetrizable rank >= 4: every a_ij a_ji <= 3");
    out.push_back(c.done());
  }
  {
    Check c("affine_subdiagrams_have_n_minus_1_vertices");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& t = facts[k].types;
      if (!t) {
        c.fail(entries[k].canonical_id);
        continue;
      }
      bool ok = true;
      t->for_each_proper_connected([&](VertexSet s) {
        if (t->kind_of(s) == CartanKind::Affine && s.size() + 1 != t->rank()) ok = false;
        return ok;
      });
      c.require(ok, entries[k].canonical_id);
    }
    c.detail("every proper connected affine subdiagram has n-1 vertices");
    out.push_back(c.done());
  }
  {
    Check c("connected_subdiagram_on_n_minus_1");
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& t = facts[k].types;
      bool ok = false;
      if (t)
        for (std::size_t v = 0; v < t->rank(); ++v) ok = ok || t->connected(VertexSet::full(t->rank()).without(v));
      c.require(ok, entries[k].canonical_id);
    }
    c.detail("some induced subdiagram on n-1 vertices is connected");
    out.push_back(c.done());
  }
  {
    Check c("symmetrizability_criteria_agree");
    std::size_t oracle_checked = 0;
    for (const auto& e : entries) {
      const bool balanced = is_symmetrizable(e.matrix).symmetrizable;
      bool ok = balanced == e.symmetrizable;
      if (e.rank <= 8) {
        ok = ok && kac_cycle_oracle(e.matrix) == balanced;
        ++oracle_checked;
      }
      c.require(ok, e.canonical_id);
    }
    std::string d = "stored flag = balanced-cycle test; Kac oracle agrees on " + std::to_string(oracle_checked) +
                    " entries of rank <= 8";
    if (opts.random_samples > 0) {
      const auto rnd = symmetrizability_equivalence_random(opts.random_samples, opts.seed);
      for (const auto& m : rnd.mismatches) c.fail("random:" + std::to_string(m.rank()));
      d += "; " + std::to_string(rnd.checked) + " random GCMs (seed " + std::to_string(opts.seed) + ")";
    }
    c.detail(d);
    out.push_back(c.done());
  }
  {
    Check c("symmetrizer_sound");
    for (const auto& e : entries) {
      if (!e.symmetrizer) continue;
      const auto& d = e.symmetrizer->d;
      bool ok = d.size() == e.rank;
      std::int64_t g = 0;
      for (std::size_t i = 0; ok && i < e.rank; ++i) {
        ok = d[i] > 0;
        g = std::gcd(g, d[i]);
        for (std::size_t j = 0; ok && j < e.rank; ++j) ok = d[i] * e.matrix(i, j) == d[j] * e.matrix(j, i);
      }
      c.require(ok && g == 1 && symmetrizer(e.matrix) == *e.symmetrizer, e.canonical_id);
    }
    c.detail("D·A exactly symmetric, d positive and coprime, matches recomputation");
    out.push_back(c.done());
  }
  {
    Check c("root_length_bound");
    std::size_t at_four = 0, max_rho = 0;
    for (const auto& e : entries) {
      if (!e.symmetrizable) continue;
      const bool ok = e.root_lengths && e.symmetrizer && *e.root_lengths == e.symmetrizer->distinct_values() &&
                      *e.root_lengths <= 4;
      c.require(ok, e.canonical_id);
      if (e.root_lengths) {
        max_rho = std::max(max_rho, *e.root_lengths);
        if (*e.root_lengths == 4) ++at_four;
      }
    }
    if (at_four != 1) c.fail("entries-with-rho-4=" + std::to_string(at_four));
    c.detail("max rho " + std::to_string(max_rho) + ", entries attaining 4: " + std::to_string(at_four));
    out.push_back(c.done());
  }
  {
    Check c("orbit_blocks_match_skeleton");
    for (const auto& e : entries) {
      const auto expect = e.symmetrizable ? OrbitSemantics::Verified : OrbitSemantics::Unverified;
      c.require(e.orbit_blocks == orbit_partition(e.matrix) && e.orbit_semantics == expect, e.canonical_id);
    }
    c.detail("stored blocks are the simply-laced skeleton components; semantics flag follows symmetrizability");
    out.push_back(c.done());
  }
  {
    Check c("orbit_count_bound");
    std::size_t max_blocks = 0;
    for (const auto& e : entries) max_blocks = std::max(max_blocks, e.orbit_blocks.block_count());
    if (max_blocks != 4) c.fail("max-blocks=" + std::to_string(max_blocks));
    c.detail("max block count " + std::to_string(max_blocks));
    out.push_back(c.done());
  }
  {
    Check c("weyl_orbit_oracle");
    std::size_t checked = 0;
    int widest = 0;
    for (const auto& e : entries) {
      if (!e.symmetrizable || e.rank > opts.orbit_oracle_max_rank) continue;
      ++checked;
      const auto h = orbit_oracle_agrees(e.matrix, opts.orbit_height, opts.orbit_height_limit);
      if (!h) {
        c.fail(e.canonical_id);
        continue;
      }
      widest = std::max(widest, *h);
    }
    c.detail(std::to_string(checked) + " symmetrizable entries of rank <= " +
             std::to_string(opts.orbit_oracle_max_rank) + " agree with reflection reachability (window " +
             std::to_string(opts.orbit_height) + ", widest used " + std::to_string(widest) + ")");
    out.push_back(c.done());
  }
  {
    Check c("norm_separation");
    std::size_t same_norm_split = 0;
    for (const auto& e : entries) {
      if (!e.symmetrizable) continue;
      std::vector<std::int64_t> norms(e.rank);
      for (std::size_t i = 0; i < e.rank; ++i) norms[i] = 2 * e.symmetrizer->d[i];
      std::vector<std::size_t> block_of(e.rank);
      for (std::size_t b = 0; b < e.orbit_blocks.blocks.size(); ++b)
        for (auto v : e.orbit_blocks.blocks[b]) block_of[v] = b;
      bool split = false, ok = true;
      for (std::size_t i = 0; i < e.rank; ++i)
        for (std::size_t j = 0; j < e.rank; ++j) {
          if (block_of[i] == block_of[j]) ok = ok && norms[i] == norms[j];
          else if (norms[i] == norms[j]) split = true;
        }
      c.require(ok, e.canonical_id);
      if (split) ++same_norm_split;
    }
    if (same_norm_split == 0) c.fail("no-same-norm-split");
    c.detail("norms constant on blocks; " + std::to_string(same_norm_split) +
             " entries have equal-norm simple roots in different orbits");
    out.push_back(c.done());
  }
  {
    Check c("dual_closure");
    for (const auto& e : entries) {
      const auto it = by_id.find(e.dual_id);
      if (it == by_id.end()) {
        c.fail(e.canonical_id);
        continue;
      }
      const auto& partner = entries[it->second];
      const bool ok = partner.dual_id == e.canonical_id &&
                      canonical_matrix(dual(e.matrix)) == canonical_matrix(partner.matrix);
      c.require(ok, e.canonical_id);
    }
    c.detail("dual_id is an involution and names the transpose's class");
    out.push_back(c.done());
  }
  return report;
}

}  // namespace dynkin
