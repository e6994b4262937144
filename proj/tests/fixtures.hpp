#pragma once

#include <random>
#include <vector>

#include "dynkin/dynkin.hpp"

namespace fixtures {

using dynkin::Gcm;

inline Gcm m(std::vector<std::vector<int>> rows) { return Gcm::from_rows(rows); }

inline Gcm a2() { return m({{2, -1}, {-1, 2}}); }
inline Gcm g2() { return m({{2, -1}, {-3, 2}}); }
inline Gcm affine_a1() { return m({{2, -2}, {-2, 2}}); }
inline Gcm twisted_a2() { return m({{2, -1}, {-4, 2}}); }
inline Gcm rank2_hyperbolic() { return m({{2, -3}, {-2, 2}}); }
inline Gcm unbalanced_triangle() { return m({{2, -1, -1}, {-2, 2, -2}, {-2, -1, 2}}); }

/// E10 written out by hand: the chain 1-2-...-9 with vertex 10 joined to 3.
inline Gcm e10_by_hand() {
  std::vector<std::vector<int>> r(10, std::vector<int>(10, 0));
  auto link = [&](int i, int j) { r[i][j] = r[j][i] = -1; };
  for (int i = 0; i < 10; ++i) r[i][i] = 2;
  for (int i = 0; i + 1 < 9; ++i) link(i, i + 1);
  link(2, 9);
  return Gcm::from_rows(r);
}

/// All finite-type fixtures of rank <= 8 from the classical and exceptional series.
inline std::vector<Gcm> finite_fixtures() {
  std::vector<Gcm> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(dynkin::finite_cartan_matrix('A', n));
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(dynkin::finite_cartan_matrix('B', n));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(dynkin::finite_cartan_matrix('C', n));
  for (std::size_t n = 4; n <= 8; ++n) out.push_back(dynkin::finite_cartan_matrix('D', n));
  for (std::size_t n = 6; n <= 8; ++n) out.push_back(dynkin::finite_cartan_matrix('E', n));
  out.push_back(dynkin::finite_cartan_matrix('F', 4));
  out.push_back(dynkin::finite_cartan_matrix('G', 2));
  return out;
}

/// Random GCM with entries in [-max_entry, 0]; about a third of pairs are joined.
inline Gcm random_gcm(std::mt19937_64& rng, std::size_t rank, int max_entry = 4) {
  std::uniform_int_distribution<int> coin(0, 2), entry(1, max_entry);
  std::vector<std::vector<int>> r(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    r[i][i] = 2;
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (coin(rng) != 0) continue;
      r[i][j] = -entry(rng);
      r[j][i] = -entry(rng);
    }
  }
  return Gcm::from_rows(r);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace fixtures

namespace fixtures {

/// Laplace expansion; slow but shares nothing with the Bareiss code.
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * cofactor_det(minor);
  }
  return det;
}

inline long long subset_det(const dynkin::Gcm& a, unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (mask >> i & 1u) idx.push_back(i);
  std::vector<std::vector<long long>> sub(idx.size(), std::vector<long long>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a(idx[r], idx[c]);
  return cofactor_det(sub);
}

inline bool mask_connected(const dynkin::Gcm& a, unsigned mask) {
  if (mask == 0) return false;
  unsigned seen = mask & (~mask + 1u), frontier = seen;
  while (frontier) {
    unsigned next = 0;
    for (std::size_t u = 0; u < a.rank(); ++u)
      if (frontier >> u & 1u)
        for (std::size_t v = 0; v < a.rank(); ++v)
          if ((mask >> v & 1u) && !(seen >> v & 1u) && a(u, v) != 0) next |= 1u << v;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

/// Definition-level type of a connected matrix via Laplace determinants:
/// 0 finite, 1 affine, 2 indefinite.
inline int naive_kind(const dynkin::Gcm& a, unsigned mask) {
  bool proper_positive = true;
  for (unsigned s = 1; s < mask; ++s)
    if ((s & mask) == s && s != mask && subset_det(a, s) <= 0) proper_positive = false;
  const long long d = subset_det(a, mask);
  if (proper_positive && d > 0) return 0;
  if (proper_positive && d == 0) return 1;
  return 2;
}

/// {hyperbolic, compact} straight from the definitions.
inline std::pair<bool, bool> naive_hyperbolic(const dynkin::Gcm& a) {
  const unsigned full = (1u << a.rank()) - 1;
  if (naive_kind(a, full) != 2) return {false, false};
  bool hyperbolic = true, compact = true;
  for (unsigned s = 1; s < full; ++s) {
    if (!mask_connected(a, s)) continue;
    const int k = naive_kind(a, s);
    if (k == 2) hyperbolic = false;
    if (k != 0) compact = false;
  }
  return {hyperbolic, hyperbolic && compact};
}

}  // namespace fixtures
