#include "groves/rational.hpp"

#include "groves/error.hpp"

namespace groves {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NonvanishingLowOrder: return "NonvanishingLowOrder";
    case ErrorKind::SingularLaplacian: return "SingularLaplacian";
    case ErrorKind::SingularInternalBlock: return "SingularInternalBlock";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::CrossingPairs: return "CrossingPairs";
    case ErrorKind::NodeNUnpaired: return "NodeNUnpaired";
    case ErrorKind::BadPairing: return "BadPairing";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadR: return "BadR";
    case ErrorKind::BadS: return "BadS";
    case ErrorKind::BadSets: return "BadSets";
    case ErrorKind::BadBlocks: return "BadBlocks";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::AsymmetricInput: return "AsymmetricInput";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty rational");
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
  mpz_class d(strip_plus(den));
  if (d == 0) throw Error(ErrorKind::ZeroDenominator, "rational '" + text + "'");
  mpq_class q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= b;
  return result;
}

}  // namespace groves
