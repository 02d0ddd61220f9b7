#include "groves/series.hpp"

#include <algorithm>
#include <sstream>

#include "groves/error.hpp"

namespace groves {

TruncatedSeries::TruncatedSeries(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int order)
    : order_(order), coeffs_(std::move(coefficients)) {
  if (order < 0) throw Error(ErrorKind::BadParams, "negative series order");
  if (order_ != kExact && static_cast<int>(coeffs_.size()) > order_ + 1)
    coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  trim();
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational& a, int order) {
  std::vector<Rational> c;
  Rational term(1);
  for (int i = 0; i <= order; ++i) {
    c.push_back(term);
    term = term * a / Rational(i + 1);
  }
  return TruncatedSeries(std::move(c), order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
  v.back() = c;
  return TruncatedSeries(std::move(v), kExact);
}

void TruncatedSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational TruncatedSeries::coeff(int i) const {
  if (i < 0) return Rational(0);
  if (i > order_)
    throw Error(ErrorKind::BadParams, "coefficient t^" + std::to_string(i) + " beyond order " +
                                          std::to_string(order_));
  return static_cast<std::size_t>(i) < coeffs_.size() ? coeffs_[i] : Rational(0);
}

std::optional<int> TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(coeffs_, std::min(order, order_));
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(std::move(v), order_ == kExact ? kExact : order_ + k);
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
  for (int i = 0; i < k && static_cast<std::size_t>(i) < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      throw Error(ErrorKind::NonvanishingLowOrder,
                  "coefficient of t^" + std::to_string(i) + " is " + coeffs_[i].to_string());
  if (order_ != kExact && order_ < k)
    throw Error(ErrorKind::NonvanishingLowOrder, "series order too small to divide by t^k");
  std::vector<Rational> v;
  if (coeffs_.size() > static_cast<std::size_t>(k)) v.assign(coeffs_.begin() + k, coeffs_.end());
  return TruncatedSeries(std::move(v), order_ == kExact ? kExact : order_ - k);
}

TruncatedSeries TruncatedSeries::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * Rational(static_cast<int>(i)));
  return TruncatedSeries(std::move(v), order_ == kExact ? kExact : std::max(order_ - 1, 0));
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeff(0).is_zero()) throw Error(ErrorKind::BadParams, "exp needs zero constant term");
  if (is_exact() && !is_zero()) throw Error(ErrorKind::BadParams, "exp of an exact series needs an order");
  // f = exp(s) solves f' = s' f; coefficientwise n f_n = sum_k k s_k f_{n-k}.
  int n_max = is_zero() ? 0 : order_;
  std::vector<Rational> f(static_cast<std::size_t>(n_max) + 1, Rational(0));
  f[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += Rational(k) * coeff(k) * f[n - k];
    f[n] = acc / Rational(n);
  }
  return TruncatedSeries(std::move(f), is_zero() ? kExact : order_);
}

TruncatedSeries TruncatedSeries::log() const {
  if (coeff(0) != Rational(1)) throw Error(ErrorKind::BadParams, "log needs constant term 1");
  if (is_exact() && coeffs_.size() > 1) throw Error(ErrorKind::BadParams, "log of an exact series needs an order");
  if (coeffs_.size() <= 1) return TruncatedSeries(0);
  // (log s)' = s'/s, integrate termwise.
  TruncatedSeries q = derivative() / *this;
  std::vector<Rational> v(1, Rational(0));
  for (int i = 0; i < order_; ++i) v.push_back(q.coeff(i) / Rational(i + 1));
  return TruncatedSeries(std::move(v), order_);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  if (order_ != kExact && static_cast<int>(coeffs_.size()) > order_ + 1)
    coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  trim();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) { return *this = *this * o; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r;
  // A zero exact factor annihilates regardless of the other's order.
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return r;
  r.order_ = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (r.order_ != TruncatedSeries::kExact) len = std::min(len, static_cast<std::size_t>(r.order_) + 1);
  r.coeffs_.assign(len, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

TruncatedSeries TruncatedSeries::divide(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  auto vb = b.valuation();
  if (!vb) throw Error(ErrorKind::ZeroDenominator, "series division by zero");
  int v = *vb;
  TruncatedSeries num = a.shifted_down(v);
  TruncatedSeries den = b.shifted_down(v);
  int out_order = std::min({num.order_, den.order_, order});
  if (out_order == kExact) throw Error(ErrorKind::BadParams, "exact series division needs an order");
  std::vector<Rational> q(static_cast<std::size_t>(out_order) + 1, Rational(0));
  Rational inv0 = Rational(1) / den.coeff(0);
  for (int n = 0; n <= out_order; ++n) {
    Rational acc = num.coeff(n);
    for (int k = 1; k <= n; ++k) {
      if (static_cast<std::size_t>(k) >= den.coeffs_.size()) break;
      acc -= den.coeffs_[k] * q[n - k];
    }
    q[n] = acc * inv0;
  }
  return TruncatedSeries(std::move(q), out_order);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return TruncatedSeries::divide(a, b, TruncatedSeries::kExact);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  int upto = std::min(a.order_, b.order_);
  std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < len && static_cast<long>(i) <= upto; ++i)
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  return true;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i] << ")";
    if (i > 0) os << "t^" << i;
    first = false;
  }
  if (first) os << "0";
  if (order_ != kExact) os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

Rational LaurentSeries::coeff(int e) const { return body.coeff(e - valuation); }

int LaurentSeries::precision() const {
  return body.is_exact() ? TruncatedSeries::kExact : valuation + body.order();
}

Rational LaurentSeries::constant_term() const {
  for (int e = valuation; e < 0; ++e)
    if (!coeff(e).is_zero())
      throw Error(ErrorKind::NonvanishingLowOrder,
                  "pole term t^" + std::to_string(e) + " has coefficient " + coeff(e).to_string());
  return coeff(0);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  int lo = std::min(valuation, other.valuation);
  int hi = std::min(precision(), other.precision());
  if (hi == TruncatedSeries::kExact)
    hi = std::max(valuation + body.length(), other.valuation + other.body.length());
  for (int e = lo; e <= hi; ++e) {
    Rational x = e < valuation ? Rational(0) : coeff(e);
    Rational y = e < other.valuation ? Rational(0) : other.coeff(e);
    if (x != y) return false;
  }
  return true;
}

LaurentSeries operator*(const LaurentSeries& a, const TruncatedSeries& b) {
  return LaurentSeries{a.valuation, a.body * b};
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  int v = std::min(a.valuation, b.valuation);
  TruncatedSeries x = a.body.shifted_up(a.valuation - v);
  TruncatedSeries y = b.body.shifted_up(b.valuation - v);
  return LaurentSeries{v, x + y};
}

TruncatedSeries one_minus_exp2t_over_t(int order) {
  // (1 - e^{2t})/t = -sum_{j>=0} 2^{j+1} t^j / (j+1)!
  std::vector<Rational> c;
  Rational term(-2);
  for (int j = 0; j <= order; ++j) {
    c.push_back(term);
    term = term * Rational(2) / Rational(j + 2);
  }
  return TruncatedSeries(std::move(c), order);
}

LaurentSeries divide_by_one_minus_exp2t_power(const TruncatedSeries& numerator, int k) {
  if (numerator.is_exact())
    throw Error(ErrorKind::BadParams, "numerator needs a finite order to divide by (1-e^{2t})^k");
  int order = numerator.order();
  TruncatedSeries unit = one_minus_exp2t_over_t(order);
  TruncatedSeries denom(1);
  for (int i = 0; i < k; ++i) denom = denom * unit;
  return LaurentSeries{-k, TruncatedSeries::divide(numerator, denom, order)};
}

Rational series_limit_constant(const TruncatedSeries& numerator, int k) {
  for (int i = 0; i < k; ++i) {
    if (!numerator.is_exact() && i > numerator.order()) break;
    if (!numerator.coeff(i).is_zero())
      throw Error(ErrorKind::NonvanishingLowOrder,
                  "coefficient of t^" + std::to_string(i) + " is " + numerator.coeff(i).to_string());
  }
  if (!numerator.is_exact() && numerator.order() < k)
    throw Error(ErrorKind::NonvanishingLowOrder, "numerator known only to t^" + std::to_string(numerator.order()));
  return numerator.coeff(k) / pow(Rational(-2), k);
}

}  // namespace groves
