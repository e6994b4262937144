#pragma once

// Exhaustive enumeration of hyperbolic Dynkin diagrams up to isomorphism.
//
// Every connected diagram has a vertex whose removal leaves it connected, and
// every proper connected subdiagram of a hyperbolic diagram of rank n is finite
// or affine, with affine ones having exactly n - 1 vertices. So the rank-n
// hyperbolic diagrams are one-vertex extensions of the connected finite and
// affine classes of rank n - 1, and those classes are themselves one-vertex
// extensions of connected finite classes. While the new vertex's edges are
// chosen, any partial connected subdiagram that is not finite (or affine on
// n - 1 vertices) is abandoned.
//
// Edge labels (p, q) satisfy p·q <= 4: in rank >= 3 every edge is a proper
// two-vertex subdiagram, hence finite or affine.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dynkin/canonical.hpp"
#include "dynkin/classify.hpp"
#include "dynkin/gcm.hpp"

namespace dynkin {

inline constexpr std::array<EdgeLabel, 8> kEdgeLabels = {{
    {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {1, 4}, {4, 1}, {2, 2},
}};

/// Largest rank the enumerators accept.
inline constexpr std::size_t kMaxEnumerationRank = kMaxMinorRank;

namespace detail {

/// Mutable square scratch matrix used while growing diagrams.
class WorkMatrix {
 public:
  explicit WorkMatrix(std::size_t n) : n_(n), e_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) at(i, i) = 2;
  }
  WorkMatrix(const Gcm& base, std::size_t n) : WorkMatrix(n) {
    for (std::size_t i = 0; i < base.rank(); ++i)
      for (std::size_t j = 0; j < base.rank(); ++j) at(i, j) = base(i, j);
  }

  int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  int at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  void set_edge(std::size_t lo, std::size_t hi, const EdgeLabel& l) {
    at(lo, hi) = -l.p;
    at(hi, lo) = -l.q;
  }
  void clear_edge(std::size_t lo, std::size_t hi) { at(lo, hi) = at(hi, lo) = 0; }

  /// Component of v inside the vertex set s.
  VertexSet component(std::size_t v, VertexSet s) const {
    VertexSet seen = VertexSet::of({v});
    std::vector<std::size_t> stack{v};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : s.members()) {
        if (!seen.contains(w) && at(u, w) != 0) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  Gcm induced(VertexSet s) const {
    const auto m = s.members();
    std::vector<int> out(m.size() * m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) out[r * m.size() + c] = at(m[r], m[c]);
    return Gcm::from_entries(m.size(), out);
  }

  Gcm matrix() const { return Gcm::from_entries(n_, e_); }

 private:
  std::size_t n_;
  std::vector<int> e_;
};

/// Kind of a connected subdiagram.
inline CartanKind connected_kind(const Gcm& c) { return SubdiagramTypes(c).kind(); }

/// Adds one vertex (index k = base.rank()) joined to at least one base vertex.
/// After each edge choice toward vertex j < k - 1, the component of the new
/// vertex inside {0..j, k} must satisfy partial_ok; complete diagrams go to
/// on_complete.
template <typename PartialOk, typename OnComplete>
void extend_by_vertex(const Gcm& base, PartialOk&& partial_ok, OnComplete&& on_complete) {
  const std::size_t k = base.rank();
  WorkMatrix w(base, k + 1);
  auto step = [&](auto&& self, std::size_t j, bool attached) -> void {
    if (j == k) {
      if (attached) on_complete(w.matrix());
      return;
    }
    // no edge to j
    self(self, j + 1, attached);
    VertexSet s = VertexSet::full(j + 1);
    s.insert(k);
    for (const auto& label : kEdgeLabels) {
      w.set_edge(j, k, label);
      if (j + 1 == k || partial_ok(w.induced(w.component(k, s)))) self(self, j + 1, true);
    }
    w.clear_edge(j, k);
  };
  step(step, 0, false);
}

inline std::vector<Gcm> sorted(std::set<Gcm> s) { return {s.begin(), s.end()}; }

}  // namespace detail

/// Canonical representatives of the connected finite-type diagrams of a rank.
inline std::vector<Gcm> connected_finite_classes(std::size_t rank) {
  if (rank == 0 || rank > kMaxEnumerationRank) throw std::invalid_argument("connected_finite_classes: bad rank");
  std::vector<Gcm> level{Gcm::identity(1)};
  for (std::size_t k = 1; k < rank; ++k) {
    std::set<Gcm> next;
    auto finite = [](const Gcm& c) { return detail::connected_kind(c) == CartanKind::Finite; };
    for (const auto& base : level)
      detail::extend_by_vertex(base, finite, [&](const Gcm& m) {
        if (finite(m)) next.insert(canonical_matrix(m));
      });
    level = detail::sorted(std::move(next));
  }
  return level;
}

/// Canonical representatives of the connected affine diagrams of a rank (>= 2).
inline std::vector<Gcm> connected_affine_classes(std::size_t rank) {
  if (rank < 2 || rank > kMaxEnumerationRank) throw std::invalid_argument("connected_affine_classes: bad rank");
  std::set<Gcm> out;
  auto finite = [](const Gcm& c) { return detail::connected_kind(c) == CartanKind::Finite; };
  for (const auto& base : connected_finite_classes(rank - 1))
    detail::extend_by_vertex(base, finite, [&](const Gcm& m) {
      if (detail::connected_kind(m) == CartanKind::Affine) out.insert(canonical_matrix(m));
    });
  return detail::sorted(std::move(out));
}

struct EnumerationOptions {
  unsigned jobs = 1;
};

/// Canonical matrices of every hyperbolic diagram of the given rank (>= 3).
inline std::vector<Gcm> enumerate_hyperbolic_rank(std::size_t rank, const EnumerationOptions& opts = {}) {
  if (rank < 3 || rank > kMaxEnumerationRank)
    throw std::invalid_argument("enumerate_hyperbolic_rank: rank must lie in [3, " +
                                std::to_string(kMaxEnumerationRank) + "]");
  std::vector<Gcm> bases = connected_finite_classes(rank - 1);
  for (auto& m : connected_affine_classes(rank - 1)) bases.push_back(std::move(m));

  auto partial_ok = [rank](const Gcm& c) {
    const auto kind = detail::connected_kind(c);
    return kind == CartanKind::Finite || (kind == CartanKind::Affine && c.rank() + 1 == rank);
  };

  std::set<Gcm> found;
  std::mutex found_mutex;
  auto work = [&](std::size_t first, std::size_t stride) {
    std::set<Gcm> local;
    for (std::size_t b = first; b < bases.size(); b += stride)
      detail::extend_by_vertex(bases[b], partial_ok, [&](const Gcm& m) {
        if (SubdiagramTypes(m).hyperbolic()) local.insert(canonical_matrix(m));
      });
    std::lock_guard lock(found_mutex);
    found.merge(local);
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  return detail::sorted(std::move(found));
}

/// All ranks in [rank_min, rank_max], sorted by (rank, canonical entries).
inline std::vector<Gcm> enumerate_hyperbolic_matrices(std::size_t rank_min, std::size_t rank_max,
                                                      const EnumerationOptions& opts = {}) {
  if (rank_min < 3 || rank_min > rank_max)
    throw std::invalid_argument("enumerate_hyperbolic_matrices: need 3 <= rank_min <= rank_max");
  std::vector<Gcm> out;
  for (std::size_t r = rank_min; r <= rank_max; ++r) {
    auto level = enumerate_hyperbolic_rank(r, opts);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Independent reference enumeration for small ranks. Builds every labelled
/// matrix edge by edge with no isomorphism reduction and no restriction on the
/// size of affine subdiagrams; a partial matrix is abandoned only when a
/// completed proper connected subdiagram is indefinite. Survivors are tested
/// with the full hyperbolic scan and deduplicated by the n! canonical form.
inline std::vector<Gcm> enumerate_hyperbolic_unpruned(std::size_t rank) {
  if (rank < 3 || rank > 6) throw std::invalid_argument("enumerate_hyperbolic_unpruned: rank must lie in [3, 6]");
  detail::WorkMatrix w(rank);
  std::set<Gcm> found;
  // Edges in the order (1,0), (2,0), (2,1), (3,0), ...
  auto step = [&](auto&& self, std::size_t k, std::size_t j) -> void {
    if (k == rank) {
      const auto m = w.matrix();
      if (is_indecomposable(m) && SubdiagramTypes(m).hyperbolic()) found.insert(canonical_matrix_bruteforce(m));
      return;
    }
    const std::size_t nk = j + 1 == k ? k + 1 : k;
    const std::size_t nj = j + 1 == k ? 0 : j + 1;
    VertexSet s = VertexSet::full(j + 1);
    s.insert(k);
    const bool proper = s.size() < rank;
    self(self, nk, nj);
    for (const auto& label : kEdgeLabels) {
      w.set_edge(j, k, label);
      bool ok = true;
      if (proper) ok = detail::connected_kind(w.induced(w.component(k, s))) != CartanKind::Indefinite;
      if (ok) self(self, nk, nj);
    }
    w.clear_edge(j, k);
  };
  step(step, 1, 0);
  return detail::sorted(std::move(found));
}

}  // namespace dynkin
