#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "groves/error.hpp"
#include "groves/matrix.hpp"
#include "groves/polynomial.hpp"
#include "groves/rational.hpp"
#include "groves/series.hpp"

namespace groves {

// Division-free determinant by Laplace expansion memoized over column
// subsets: D[C] = det of the first |C| rows restricted to columns C.
// O(2^m m) ring operations; valid over any commutative ring.
template <class S>
S determinant_expansion(const Matrix<S>& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.dim();
  if (n == 0) return S(1);
  if (n > 24) throw Error(ErrorKind::TooLarge, "expansion determinant limited to 24x24");
  std::vector<S> table(std::size_t{1} << n, S(0));
  table[0] = S(1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int row = std::popcount(mask) - 1;
    S acc(0);
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const S& a = m(row, j);
      if (!is_zero(a)) {
        // Expanding the last row of the |C|x|C| minor along column position pos.
        S term = a * table[mask & ~(1u << j)];
        if ((row + pos) % 2) acc -= term; else acc += term;
      }
      ++pos;
    }
    table[mask] = std::move(acc);
  }
  return table.back();
}

// Gaussian elimination with exact division.
inline Rational determinant_elimination(Matrix<Rational> a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.dim();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

template <class S>
S determinant(const Matrix<S>& m) {
  if constexpr (std::is_same_v<S, Rational>) {
    return determinant_elimination(m);
  } else {
    return determinant_expansion(m);
  }
}

template <class S>
void check_antisymmetric(const Matrix<S>& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "Pfaffian of a non-square matrix");
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) {
      bool ok = (i == j) ? is_zero(m(i, i)) : (m(i, j) == -m(j, i));
      if (!ok)
        throw Error(ErrorKind::NotAntisymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(j) +
                        "," + std::to_string(i) + ")");
    }
}

// Pfaffian by expansion along the first remaining row, memoized over the
// set of remaining indices. Sign convention: Pf [[0,a],[-a,0]] = a.
// Does not check antisymmetry; only the upper triangle is read.
template <class S>
S pfaffian_expansion(const Matrix<S>& m) {
  const std::size_t n = m.dim();
  if (n % 2) throw Error(ErrorKind::OddDimension, "Pfaffian of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (n == 0) return S(1);
  if (n > 30) throw Error(ErrorKind::TooLarge, "expansion Pfaffian limited to 30x30");
  std::unordered_map<std::uint32_t, S> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> S {
    if (mask == 0) return S(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int i = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << i);
    S acc(0);
    int between = 0;
    for (int j = i + 1; j < static_cast<int>(n); ++j) {
      if (!(rest & (1u << j))) continue;
      const S& a = m(i, j);
      if (!is_zero(a)) {
        S term = a * self(self, rest & ~(1u << j));
        if (between % 2) acc -= term; else acc += term;
      }
      ++between;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32) ? 0xffffffffu : ((1u << n) - 1u));
}

// Skew-symmetric elimination: congruence transforms that keep the Pfaffian
// fixed, pivoting by simultaneous row/column swaps (each flips the sign).
inline Rational pfaffian_elimination(Matrix<Rational> a) {
  const std::size_t n = a.dim();
  if (n % 2) throw Error(ErrorKind::OddDimension, "Pfaffian of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Rational pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
      pf = -pf;
    }
    const Rational pivot = a(k, k + 1);
    pf *= pivot;
    const Rational inv = Rational(1) / pivot;
    // Clear row k beyond the pivot: row_i -= tau row_{k+1}, col_i -= tau col_{k+1}.
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i).is_zero()) continue;
      const Rational tau = a(k, i) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= tau * a(k + 1, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) -= tau * a(j, k + 1);
    }
  }
  return pf;
}

// Pfaffian of an antisymmetric matrix; antisymmetry is verified first.
template <class S>
S pfaffian(const Matrix<S>& m) {
  check_antisymmetric(m);
  if (m.dim() % 2) throw Error(ErrorKind::OddDimension, "Pfaffian of a " + std::to_string(m.dim()) + "x" + std::to_string(m.dim()) + " matrix");
  if constexpr (std::is_same_v<S, Rational>) {
    return pfaffian_elimination(m);
  } else {
    return pfaffian_expansion(m);
  }
}

// Gauss-Jordan inverse; throws Singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);

// Coefficient matrices of a matrix of series: out[k](i,j) = [t^k] m(i,j).
std::vector<Matrix<Rational>> coefficient_matrices(const Matrix<TruncatedSeries>& m, int order);
Matrix<TruncatedSeries> from_coefficient_matrices(const std::vector<Matrix<Rational>>& coeffs, int order);

// Inverse of a series matrix whose constant term is invertible, known to
// `order`. X_0 = M_0^{-1}, X_k = -X_0 sum_{j=1..k} M_j X_{k-j}.
Matrix<TruncatedSeries> inverse_series(const Matrix<TruncatedSeries>& m, int order);

// Lift a rational matrix to exact constant series.
Matrix<TruncatedSeries> to_series(const Matrix<Rational>& m);

}  // namespace groves
