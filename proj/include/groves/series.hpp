#pragma once

#include <climits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Power series in t with rational coefficients, known exactly up to and
// including t^order. Constants built from a Rational are exact (unbounded
// order); combining two series truncates at the smaller order.
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX;

  TruncatedSeries() = default;
  TruncatedSeries(int c) : TruncatedSeries(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  TruncatedSeries(const Rational& c);                        // NOLINT(google-explicit-constructor)
  TruncatedSeries(std::vector<Rational> coefficients, int order);

  // e^{a t} truncated at `order`.
  static TruncatedSeries exp_linear(const Rational& a, int order);
  // The monomial c t^power, exact.
  static TruncatedSeries monomial(const Rational& c, int power);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  // Coefficient of t^i; zero past the stored terms. Requires i <= order().
  Rational coeff(int i) const;
  // Index of the lowest nonzero coefficient, empty for the zero series.
  std::optional<int> valuation() const;
  bool is_zero() const { return coeffs_.empty(); }
  // One past the highest stored (nonzero) coefficient.
  int length() const { return static_cast<int>(coeffs_.size()); }

  TruncatedSeries truncated(int order) const;
  // Multiply by t^k (k >= 0); order grows by k.
  TruncatedSeries shifted_up(int k) const;
  // Divide by t^k; requires the k lowest coefficients to vanish.
  TruncatedSeries shifted_down(int k) const;

  TruncatedSeries derivative() const;
  // exp(s) for s with zero constant term.
  TruncatedSeries exp() const;
  // log(s) for s with constant term 1.
  TruncatedSeries log() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  // Exact series division. The divisor's valuation v must not exceed the
  // dividend's; the quotient is known to order min(orders) - v. Dividing two
  // exact series needs an explicit order, see divide().
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  static TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b, int order);

  // Agreement on every coefficient both operands know.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.to_string();
  }

 private:
  void trim();

  int order_ = kExact;
  std::vector<Rational> coeffs_;  // trailing zeros trimmed, size <= order_ + 1
};

inline bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }

// t^valuation * body. Used for quantities divided by (1 - e^{2t})^k before
// the pole cancellation has been established.
struct LaurentSeries {
  int valuation = 0;
  TruncatedSeries body;

  // Coefficient of t^e; requires e <= valuation + body.order().
  Rational coeff(int e) const;
  // Highest exponent known.
  int precision() const;
  // Throws NonvanishingLowOrder if any negative power survives.
  Rational constant_term() const;
  bool agrees_with(const LaurentSeries& other) const;
};

LaurentSeries operator*(const LaurentSeries& a, const TruncatedSeries& b);
LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);

// (1 - e^{2t}) / t, the unit part of the divisor used throughout.
TruncatedSeries one_minus_exp2t_over_t(int order);

// numerator / (1 - e^{2t})^k as a Laurent series with valuation -k.
LaurentSeries divide_by_one_minus_exp2t_power(const TruncatedSeries& numerator, int k);

// Value of numerator / (1 - e^{2t})^k at t = 0, i.e. [t^k]numerator / (-2)^k.
// Coefficients below t^k must vanish.
Rational series_limit_constant(const TruncatedSeries& numerator, int k);

}  // namespace groves
