#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Formal variable. Symmetric variables X[i,j] are stored with i <= j;
// antisymmetric variables X'[i,j] with i < j (the sign of a swap is folded
// into the coefficient, the diagonal is identically zero); potentials f[i]
// carry a single index.
struct Variable {
  enum class Kind { Symmetric, Antisymmetric, Potential };

  Kind kind = Kind::Symmetric;
  char family = 'A';
  int i = 0;
  int j = 0;

  auto operator<=>(const Variable&) const = default;
  std::string to_string() const;
};

// Sorted (variable, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<Variable, int>>;

// Sparse multivariate polynomial with rational coefficients. Zero
// coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)

  static Polynomial symmetric(char family, int i, int j);
  // X'[i,j]: -X'[j,i] when i > j, zero when i == j.
  static Polynomial antisymmetric(char family, int i, int j);
  static Polynomial potential(char family, int i);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool has_integer_coefficients() const;
  // Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  // Ring homomorphism extending a variable substitution. Variables for which
  // `image` returns nullopt are kept.
  Polynomial substitute(const std::function<std::optional<Polynomial>(const Variable&)>& image) const;
  Rational evaluate(const std::function<Rational(const Variable&)>& value) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // Terms in sorted monomial order, e.g. "-G'[1,2] - G'[2,3] + G'[1,3]".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace groves
