#pragma once

// Symmetrizability via balanced cycles, Kac's cycle-product oracle, the
// symmetrizing diagonal and the induced bilinear form.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynkin/gcm.hpp"

namespace dynkin {

/// Positive coprime integers d with d_i a[i][j] = d_j a[j][i].
struct Symmetrization {
  std::vector<std::int64_t> d;

  std::size_t distinct_values() const { return std::set<std::int64_t>(d.begin(), d.end()).size(); }
  bool operator==(const Symmetrization&) const = default;
};

/// A cycle (i1, ..., ik, i1) whose two entry products differ:
/// forward = a[i1][i2]·…·a[ik][i1], reverse = a[i2][i1]·…·a[i1][ik].
struct UnbalancedCycleWitness {
  std::vector<std::size_t> cycle;  // closed: front() == back()
  std::int64_t forward_product = 0;
  std::int64_t reverse_product = 0;
};

struct SymmetrizabilityResult {
  bool symmetrizable = true;
  std::optional<UnbalancedCycleWitness> witness;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cycle product overflows int64");
  return r;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const auto g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

/// BFS spanning forest: parent (or npos at a root), depth, and d propagated
/// along tree edges with d_root = 1.
struct SpanningForest {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> root;
  std::vector<Rational> d;
};

inline SpanningForest spanning_forest(const Gcm& a) {
  const std::size_t n = a.rank();
  SpanningForest f;
  f.parent.assign(n, SpanningForest::npos);
  f.depth.assign(n, 0);
  f.root.assign(n, SpanningForest::npos);
  f.d.assign(n, Rational(0));
  for (std::size_t s = 0; s < n; ++s) {
    if (f.root[s] != SpanningForest::npos) continue;
    f.root[s] = s;
    f.d[s] = Rational(1);
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (!a.adjacent(u, v) || f.root[v] != SpanningForest::npos) continue;
        f.root[v] = s;
        f.parent[v] = u;
        f.depth[v] = f.depth[u] + 1;
        // d_v a[v][u] = d_u a[u][v]
        f.d[v] = f.d[u] * Rational(a(u, v), a(v, u));
        queue.push_back(v);
      }
    }
  }
  return f;
}

/// Fundamental cycle of the non-tree edge {u, v}, normalized to start at its
/// smallest vertex and head toward the smaller of that vertex's two cycle
/// neighbours.
inline std::vector<std::size_t> fundamental_cycle(const SpanningForest& f, std::size_t u,
                                                  std::size_t v) {
  std::vector<std::size_t> up, down;
  auto x = u, y = v;
  while (f.depth[x] > f.depth[y]) up.push_back(std::exchange(x, f.parent[x]));
  while (f.depth[y] > f.depth[x]) down.push_back(std::exchange(y, f.parent[y]));
  while (x != y) {
    up.push_back(std::exchange(x, f.parent[x]));
    down.push_back(std::exchange(y, f.parent[y]));
  }
  // u .. lca .. v, then the closing edge v -> u
  std::vector<std::size_t> ring = up;
  ring.push_back(x);
  ring.insert(ring.end(), down.rbegin(), down.rend());

  const auto k = ring.size();
  const auto start = static_cast<std::size_t>(std::min_element(ring.begin(), ring.end()) - ring.begin());
  const auto next = ring[(start + 1) % k];
  const auto prev = ring[(start + k - 1) % k];
  std::vector<std::size_t> cycle;
  for (std::size_t step = 0; step < k; ++step) {
    const auto idx = next < prev ? (start + step) % k : (start + k - step) % k;
    cycle.push_back(ring[idx]);
  }
  cycle.push_back(cycle.front());
  return cycle;
}

inline UnbalancedCycleWitness make_witness(const Gcm& a, std::vector<std::size_t> cycle) {
  UnbalancedCycleWitness w;
  w.forward_product = 1;
  w.reverse_product = 1;
  for (std::size_t s = 0; s + 1 < cycle.size(); ++s) {
    w.forward_product = checked_mul(w.forward_product, a(cycle[s], cycle[s + 1]));
    w.reverse_product = checked_mul(w.reverse_product, a(cycle[s + 1], cycle[s]));
  }
  w.cycle = std::move(cycle);
  return w;
}

/// Component-wise symmetrizer: each component scaled to coprime positive
/// integers independently. Empty optional when some cycle is unbalanced.
inline std::optional<std::vector<std::int64_t>> component_symmetrizer(const Gcm& a) {
  const auto f = spanning_forest(a);
  const std::size_t n = a.rank();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (a.adjacent(u, v) && f.d[u] * a(u, v) != f.d[v] * a(v, u)) return std::nullopt;

  std::vector<std::int64_t> out(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (f.root[r] != r) continue;
    std::int64_t denom_lcm = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (f.root[v] == r) denom_lcm = checked_lcm(denom_lcm, f.d[v].denominator());
    std::int64_t g = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (f.root[v] != r) continue;
      out[v] = checked_mul(f.d[v].numerator(), denom_lcm / f.d[v].denominator());
      g = std::gcd(g, out[v]);
    }
    for (std::size_t v = 0; v < n; ++v)
      if (f.root[v] == r) out[v] /= g;
  }
  return out;
}

}  // namespace detail

/// Balanced-cycle test on the fundamental cycles of a BFS spanning forest.
inline SymmetrizabilityResult is_symmetrizable(const Gcm& a) {
  const auto f = detail::spanning_forest(a);
  for (std::size_t u = 0; u < a.rank(); ++u) {
    for (std::size_t v = u + 1; v < a.rank(); ++v) {
      if (!a.adjacent(u, v) || f.parent[v] == u || f.parent[u] == v) continue;
      if (f.d[u] * a(u, v) != f.d[v] * a(v, u))
        return {false, detail::make_witness(a, detail::fundamental_cycle(f, u, v))};
    }
  }
  return {true, std::nullopt};
}

/// Kac's criterion checked literally: for every simple index cycle of length
/// >= 3, a[i1][i2]·…·a[ik][i1] equals a[i2][i1]·…·a[i1][ik]. Exponential;
/// limited to rank 8.
inline bool kac_cycle_oracle(const Gcm& a) {
  const std::size_t n = a.rank();
  if (n > 8) throw std::invalid_argument("kac_cycle_oracle: rank above oracle bound 8");
  for (int x : a.entries())
    if (x < -(1 << 15)) throw std::invalid_argument("kac_cycle_oracle: entry too large");
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  bool ok = true;
  // Paths start at their smallest vertex. At most 8 factors of 16 bits each
  // fit in __int128.
  auto dfs = [&](auto&& self, __int128 fwd, __int128 rev) -> void {
    const auto last = path.back();
    for (std::size_t v = path.front(); v < n && ok; ++v) {
      if (a(last, v) == 0 || v == last) continue;
      if (v == path.front()) {
        if (path.size() >= 3 && fwd * a(last, v) != rev * a(v, last)) ok = false;
        continue;
      }
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      self(self, fwd * a(last, v), rev * a(v, last));
      path.pop_back();
      used[v] = false;
    }
  };
  for (std::size_t s = 0; s < n && ok; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, 1, 1);
  }
  return ok;
}

/// The symmetrizing diagonal of an indecomposable symmetrizable matrix.
inline Symmetrization symmetrizer(const Gcm& a) {
  if (!is_indecomposable(a)) throw std::invalid_argument("symmetrizer: matrix is decomposable");
  auto d = detail::component_symmetrizer(a);
  if (!d) throw std::invalid_argument("symmetrizer: matrix is not symmetrizable");
  return {std::move(*d)};
}

inline bool is_symmetric(const Gcm& a) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// Number of distinct real-root lengths.
inline std::size_t root_length_count(const Gcm& a) { return symmetrizer(a).distinct_values(); }

/// B = D·A with each component's D normalized separately; B[i][j] = (α_i|α_j).
inline std::vector<std::vector<std::int64_t>> bilinear_form(const Gcm& a) {
  const auto d = detail::component_symmetrizer(a);
  if (!d) throw std::invalid_argument("bilinear_form: matrix is not symmetrizable");
  std::vector<std::vector<std::int64_t>> b(a.rank(), std::vector<std::int64_t>(a.rank()));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) b[i][j] = detail::checked_mul((*d)[i], a(i, j));
  return b;
}

}  // namespace dynkin
