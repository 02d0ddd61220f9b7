#include "groves/polynomial.hpp"

#include <sstream>

namespace groves {

std::string Variable::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Symmetric: os << family << '[' << i << ',' << j << ']'; break;
    case Kind::Antisymmetric: os << family << "'[" << i << ',' << j << ']'; break;
    case Kind::Potential: os << family << '[' << i << ']'; break;
  }
  return os.str();
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::symmetric(char family, int i, int j) {
  if (i > j) std::swap(i, j);
  Polynomial p;
  p.terms_.emplace(Monomial{{Variable{Variable::Kind::Symmetric, family, i, j}, 1}}, Rational(1));
  return p;
}

Polynomial Polynomial::antisymmetric(char family, int i, int j) {
  if (i == j) return Polynomial();
  Rational sign(1);
  if (i > j) {
    std::swap(i, j);
    sign = Rational(-1);
  }
  Polynomial p;
  p.terms_.emplace(Monomial{{Variable{Variable::Kind::Antisymmetric, family, i, j}, 1}}, sign);
  return p;
}

Polynomial Polynomial::potential(char family, int i) {
  Polynomial p;
  p.terms_.emplace(Monomial{{Variable{Variable::Kind::Potential, family, i, 0}, 1}}, Rational(1));
  return p;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::substitute(
    const std::function<std::optional<Polynomial>(const Variable&)>& image) const {
  Polynomial result;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& [v, e] : m) {
      std::optional<Polynomial> img = image(v);
      Polynomial factor;
      if (img) {
        factor = *img;
      } else {
        factor.terms_.emplace(Monomial{{v, 1}}, Rational(1));
      }
      for (int k = 0; k < e; ++k) term = term * factor;
    }
    result += term;
  }
  return result;
}

Rational Polynomial::evaluate(const std::function<Rational(const Variable&)>& value) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) term *= pow(value(v), e);
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (m.empty()) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) os << '*';
      os << m[k].first.to_string();
      if (m[k].second > 1) os << '^' << m[k].second;
    }
  }
  return os.str();
}

}  // namespace groves
