#include "groves/linalg.hpp"

#include <algorithm>

namespace groves {

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.dim();
  Matrix<Rational> a = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw Error(ErrorKind::Singular, "matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rational piv = Rational(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Matrix<Rational>> coefficient_matrices(const Matrix<TruncatedSeries>& m, int order) {
  std::vector<Matrix<Rational>> out(static_cast<std::size_t>(order) + 1, Matrix<Rational>(m.rows(), m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (int k = 0; k <= order; ++k) out[k](i, j) = m(i, j).coeff(k);
  return out;
}

Matrix<TruncatedSeries> from_coefficient_matrices(const std::vector<Matrix<Rational>>& coeffs, int order) {
  if (coeffs.empty()) return {};
  Matrix<TruncatedSeries> m(coeffs[0].rows(), coeffs[0].cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Rational> c;
      for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k) c.push_back(coeffs[k](i, j));
      m(i, j) = TruncatedSeries(std::move(c), order);
    }
  return m;
}

Matrix<TruncatedSeries> inverse_series(const Matrix<TruncatedSeries>& m, int order) {
  auto coeffs = coefficient_matrices(m, order);
  const Matrix<Rational> x0 = inverse(coeffs[0]);
  std::vector<Matrix<Rational>> x{x0};
  for (int k = 1; k <= order; ++k) {
    Matrix<Rational> acc(m.rows(), m.cols());
    for (int j = 1; j <= k; ++j) acc = acc + coeffs[j] * x[k - j];
    x.push_back(-(x0 * acc));
  }
  return from_coefficient_matrices(x, order);
}

Matrix<TruncatedSeries> to_series(const Matrix<Rational>& m) {
  return m.map([](const Rational& r) { return TruncatedSeries(r); });
}

}  // namespace groves
