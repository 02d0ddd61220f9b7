#pragma once

#include <vector>

#include "groves/matrix.hpp"
#include "groves/polynomial.hpp"

namespace groves::testing {

// Antisymmetric matrix from its strict upper triangle, row by row.
inline Matrix<Polynomial> from_upper(std::size_t m, const std::vector<Polynomial>& upper) {
  Matrix<Polynomial> out(m, m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      out(i, j) = upper.at(k++);
      out(j, i) = -out(i, j);
    }
  return out;
}

// Mode G matrix for U1 S2 I3 D4 I5 F6 O7, rows +1 o2 *2 o4 o6 *7.
inline Matrix<Polynomial> golden_usidif_g() {
  auto G = [](int i, int j) { return Polynomial::symmetric('G', i, j); };
  auto Gp = [](int i, int j) { return Polynomial::antisymmetric('G', i, j); };
  const Polynomial one(1), zero(0);
  return from_upper(6, {
      G(1, 2) - Gp(1, 2), G(1, 2), G(1, 4) - Gp(1, 4), G(1, 6) - Gp(1, 6), one,
      G(2, 2), -Gp(2, 4), -Gp(2, 6), one,
      -G(2, 4), -G(2, 6), zero,
      -Gp(4, 6), one,
      one});
}

// Mode L matrix for the same path, rows +1 *3 o3 o4 *5 o5 o6 *7.
inline Matrix<Polynomial> golden_usidif_l() {
  auto L = [](int i, int j) { return Polynomial::symmetric('L', i, j); };
  auto Lp = [](int i, int j) { return Polynomial::antisymmetric('L', i, j); };
  const Polynomial zero(0);
  return from_upper(8, {
      L(1, 3), L(1, 3) - Lp(1, 3), L(1, 4) - Lp(1, 4), L(1, 5), L(1, 5) - Lp(1, 5), L(1, 6) - Lp(1, 6), L(1, 7),
      -L(3, 3), -L(3, 4), zero, -L(3, 5), -L(3, 6), zero,
      -Lp(3, 4), L(3, 5), -Lp(3, 5), -Lp(3, 6), L(3, 7),
      L(4, 5), -Lp(4, 5), -Lp(4, 6), L(4, 7),
      -L(5, 5), -L(5, 6), zero,
      -Lp(5, 6), L(5, 7),
      L(6, 7)});
}

}  // namespace groves::testing
