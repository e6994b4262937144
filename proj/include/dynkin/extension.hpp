#pragma once

// Affine extension of a finite diagram and the overextension of an affine one.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/classify.hpp"
#include "dynkin/gcm.hpp"
#include "dynkin/symmetrize.hpp"
#include "dynkin/weyl.hpp"

namespace dynkin {

/// Appends alpha_0 = -delta (delta the highest root) as the last vertex.
/// Pairings come from the invariant form:
///   a[0][j] = 2(alpha_0|alpha_j)/(alpha_0|alpha_0),  a[j][0] = 2(alpha_j|alpha_0)/(alpha_j|alpha_j).
inline Gcm extend_finite_to_affine(const Gcm& a) {
  if (!is_indecomposable(a) || kind_of(a) != CartanKind::Finite)
    throw std::invalid_argument("extend_finite_to_affine: matrix is not indecomposable of finite type");
  const std::size_t n = a.rank();
  const auto delta = highest_root(a);
  const auto b = bilinear_form(a);

  // (alpha_0 | alpha_j) = -(delta | alpha_j)
  std::vector<std::int64_t> with_zero(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) with_zero[j] -= delta.coords[k] * b[k][j];
  std::int64_t zero_norm = 0;
  for (std::size_t j = 0; j < n; ++j) zero_norm -= delta.coords[j] * with_zero[j];

  auto exact = [](std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0)
      throw std::logic_error("extend_finite_to_affine: non-integral pairing " + std::to_string(num) + "/" +
                             std::to_string(den));
    return static_cast<int>(num / den);
  };

  auto rows = a.rows();
  for (std::size_t j = 0; j < n; ++j) rows[j].push_back(exact(2 * with_zero[j], b[j][j]));
  std::vector<int> last(n + 1, 2);
  for (std::size_t j = 0; j < n; ++j) last[j] = exact(2 * with_zero[j], zero_norm);
  rows.push_back(std::move(last));
  return Gcm::from_rows(rows);
}

/// Appends one vertex joined to zero_vertex by a single edge.
inline Gcm overextend_affine(const Gcm& a, std::size_t zero_vertex) {
  if (zero_vertex >= a.rank()) throw std::out_of_range("overextend_affine: zero vertex out of range");
  if (!is_indecomposable(a) || kind_of(a) != CartanKind::Affine)
    throw std::invalid_argument("overextend_affine: matrix is not indecomposable of affine type");
  auto rows = a.rows();
  for (std::size_t j = 0; j < rows.size(); ++j) rows[j].push_back(j == zero_vertex ? -1 : 0);
  std::vector<int> last(a.rank() + 1, 0);
  last[zero_vertex] = -1;
  last.back() = 2;
  rows.push_back(std::move(last));
  return Gcm::from_rows(rows);
}

}  // namespace dynkin
