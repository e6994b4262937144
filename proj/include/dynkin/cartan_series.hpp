#pragma once

// Cartan matrices of the finite series in Bourbaki numbering.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/gcm.hpp"

namespace dynkin {

/// series in {A,B,C,D,E,F,G}; B_n has its short root last, G_2 = [[2,-1],[-3,2]].
inline Gcm finite_cartan_matrix(char series, std::size_t n) {
  auto fail = [&] {
    throw std::invalid_argument(std::string("no finite Cartan matrix ") + series + std::to_string(n));
  };
  if (n == 0) fail();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { m[i][j] = m[j][i] = -1; };
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) link(i, i + 1);
  };
  switch (series) {
    case 'A': chain(n); break;
    case 'B':
      if (n < 2) fail();
      chain(n);
      m[n - 1][n - 2] = -2;
      break;
    case 'C':
      if (n < 2) fail();
      chain(n);
      m[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) fail();
      chain(n - 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) fail();
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) fail();
      chain(4);
      m[2][1] = -2;
      break;
    case 'G':
      if (n != 2) fail();
      m[0][1] = -1;
      m[1][0] = -3;
      break;
    default: fail();
  }
  return Gcm::from_rows(m);
}

}  // namespace dynkin
