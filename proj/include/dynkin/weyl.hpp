#pragma once

// Simply-laced skeleton, Weyl-orbit partition of the simple roots, and a
// brute-force reflection engine over root coordinates.
//
// Pairing convention: a[i][j] = <alpha_j, alpha_i^vee>, so the simple
// reflection r_i subtracts (sum_j a[i][j] k_j) alpha_i from beta = sum k_j alpha_j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/classify.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/symmetrize.hpp"

namespace dynkin {

inline constexpr std::size_t kDefaultRootBudget = 1'000'000;

/// Coefficients of beta in the simple-root basis.
struct RootVector {
  std::vector<int> coords;

  static RootVector simple(std::size_t rank, std::size_t i) {
    RootVector r{std::vector<int>(rank, 0)};
    r.coords[i] = 1;
    return r;
  }

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool is_positive() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
  }

  bool operator==(const RootVector&) const = default;
  /// Canonical order: height, then coordinates lexicographically.
  bool operator<(const RootVector& o) const {
    const int h = height(), oh = o.height();
    if (h != oh) return h < oh;
    return coords < o.coords;
  }
};

/// Blocks sorted internally and ordered by smallest member.
struct OrbitPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  bool operator==(const OrbitPartition&) const = default;
};

class RootBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keeps only the (1,1) edges.
inline DynkinDiagram simply_laced_skeleton(const DynkinDiagram& d) {
  std::vector<DiagramEdge> kept;
  for (const auto& e : d.edges())
    if (e.label.p == 1 && e.label.q == 1) kept.push_back(e);
  return DynkinDiagram(d.vertex_count(), std::move(kept));
}

namespace detail {
inline OrbitPartition partition_from_labels(std::vector<std::size_t> label) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t v = 0; v < label.size(); ++v) by_label[label[v]].push_back(v);
  OrbitPartition p;
  for (auto& [_, block] : by_label) p.blocks.push_back(std::move(block));
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};
}  // namespace detail

/// Connected components of the simply-laced skeleton.
inline OrbitPartition orbit_partition(const DynkinDiagram& d) {
  detail::UnionFind uf(d.vertex_count());
  const auto skeleton = simply_laced_skeleton(d);
  for (const auto& e : skeleton.edges()) uf.unite(e.i, e.j);
  std::vector<std::size_t> label(d.vertex_count());
  for (std::size_t v = 0; v < label.size(); ++v) label[v] = uf.find(v);
  return detail::partition_from_labels(std::move(label));
}

inline OrbitPartition orbit_partition(const Gcm& a) { return orbit_partition(matrix_to_diagram(a)); }

/// r_i(beta).
inline RootVector reflect(const Gcm& a, std::size_t i, const RootVector& beta) {
  if (beta.coords.size() != a.rank() || i >= a.rank())
    throw std::invalid_argument("reflect: dimension mismatch");
  long long pairing = 0;
  for (std::size_t j = 0; j < a.rank(); ++j) pairing += static_cast<long long>(a(i, j)) * beta.coords[j];
  RootVector out = beta;
  const long long c = out.coords[i] - pairing;
  if (c > std::numeric_limits<int>::max() || c < std::numeric_limits<int>::min())
    throw std::overflow_error("reflect: coordinate overflow");
  out.coords[i] = static_cast<int>(c);
  return out;
}

/// Closure of the simple roots under simple reflections inside the window
/// 0 < height <= max_height, sorted canonically. Every positive real root of
/// height <= max_height is reached, since a non-simple positive real root has
/// a reflection that lowers its height while keeping it positive.
inline std::vector<RootVector> real_roots_up_to_height(const Gcm& a, int max_height,
                                                       std::size_t budget = kDefaultRootBudget) {
  if (max_height < 1) throw std::invalid_argument("real_roots_up_to_height: height must be positive");
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto s = RootVector::simple(a.rank(), i);
    if (seen.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < a.rank(); ++i) {
        auto r = reflect(a, i, beta);
        if (!r.is_positive() || r.height() > max_height) continue;
        if (seen.insert(r).second) {
          if (seen.size() > budget)
            throw RootBudgetExceeded("real root closure exceeded budget of " + std::to_string(budget));
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// i ~ j when alpha_j is reachable from alpha_i by simple reflections without
/// leaving the window 0 < height <= max_height.
inline OrbitPartition orbit_partition_bruteforce(const Gcm& a, int max_height,
                                                 std::size_t budget = kDefaultRootBudget) {
  const auto roots = real_roots_up_to_height(a, max_height, budget);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < roots.size(); ++k) index.emplace(roots[k].coords, k);
  detail::UnionFind uf(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const auto r = reflect(a, i, roots[k]);
      if (auto it = index.find(r.coords); it != index.end()) uf.unite(k, it->second);
    }
  }
  std::vector<std::size_t> label(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    label[i] = uf.find(index.at(RootVector::simple(a.rank(), i).coords));
  return detail::partition_from_labels(std::move(label));
}

/// (beta|beta) under B = D·A; integral because D is integral.
inline std::int64_t root_norm(const Gcm& a, const RootVector& beta) {
  const auto b = bilinear_form(a);
  std::int64_t norm = 0;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) norm += beta.coords[i] * b[i][j] * beta.coords[j];
  return norm;
}

/// All positive roots of a finite-type matrix (no height cap).
inline std::vector<RootVector> finite_positive_roots(const Gcm& a, std::size_t budget = kDefaultRootBudget) {
  if (!is_indecomposable(a) || kind_of(a) != CartanKind::Finite)
    throw std::invalid_argument("finite_positive_roots: matrix is not of finite type");
  return real_roots_up_to_height(a, std::numeric_limits<int>::max(), budget);
}

/// The unique positive root of maximal height of a finite-type matrix.
inline RootVector highest_root(const Gcm& a) {
  const auto roots = finite_positive_roots(a);
  const auto& top = roots.back();
  for (const auto& r : roots) {
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (r.coords[i] > top.coords[i])
        throw std::logic_error("highest_root: maximal-height root does not dominate");
  }
  return top;
}

}  // namespace dynkin
