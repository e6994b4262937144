#pragma once

// Exact integer determinants by Bareiss fraction-free elimination.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dynkin {

/// Determinant of a k×k row-major integer matrix. Every intermediate value is
/// itself a minor of the input, so the only failure mode is int64 overflow,
/// which throws std::overflow_error.
inline std::int64_t bareiss_determinant(std::vector<std::int64_t> m, std::size_t k) {
  if (m.size() != k * k) throw std::invalid_argument("bareiss_determinant: size mismatch");
  if (k == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return m[r * k + c]; };
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      for (std::size_t c = p + 1; c < k; ++c) {
        const __int128 num = static_cast<__int128>(at(r, c)) * at(p, p) -
                             static_cast<__int128>(at(r, p)) * at(p, c);
        const __int128 q = num / prev;  // exact by Sylvester's identity
        if (q > INT64_MAX || q < INT64_MIN)
          throw std::overflow_error("bareiss_determinant: intermediate minor exceeds int64");
        at(r, c) = static_cast<std::int64_t>(q);
      }
      at(r, p) = 0;
    }
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

/// Determinant of the principal submatrix of an n×n row-major matrix on the
/// given (sorted or unsorted) index list.
inline std::int64_t principal_determinant(std::span<const int> entries, std::size_t n,
                                          std::span<const std::size_t> indices) {
  const std::size_t k = indices.size();
  std::vector<std::int64_t> m(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m[r * k + c] = entries[indices[r] * n + indices[c]];
  return bareiss_determinant(std::move(m), k);
}

}  // namespace dynkin
