#pragma once

#include <stdexcept>
#include <string>

namespace groves {

enum class ErrorKind {
  OddDimension,
  NotAntisymmetric,
  DimensionMismatch,
  Singular,
  NonvanishingLowOrder,
  SingularLaplacian,
  SingularInternalBlock,
  InvalidGraph,
  InvalidPath,
  CrossingPairs,
  NodeNUnpaired,
  BadPairing,
  BadPartition,
  BadR,
  BadS,
  BadSets,
  BadBlocks,
  BadParams,
  AsymmetricInput,
  TooLarge,
  ZeroDenominator,
  Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and tests)
// can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace groves
