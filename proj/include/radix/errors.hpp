#pragma once

#include <stdexcept>
#include <string>

namespace radix {

enum class Errc {
  Parse,
  SingularMatrix,
  InvalidDescriptor,
  NotInvertible,
  NotAField,
  DegreeTooLarge,
  NotDisjoint,
  DimensionMismatch,
  NotInL,
  ZeroElement,
  NotEigenBasis,
  SingularLambda,
  NotGenerating,
  NotEigen,
  Indeterminate,
  NotStronglyDisjoint,
  NotMinimalExponent,
  ComplementIntersects,
  NotCertified,
  RankDeficient,
  NotIdempotent,
  NotProductStructure,
  DegreeMismatch,
  NotInH,
  Internal,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace radix
