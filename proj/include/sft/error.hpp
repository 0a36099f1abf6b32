#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sft {

enum class ErrorCode {
  Malformed,
  NotEssential,
  NotIrreducible,
  ConditionIFails,
  InadmissibleWord,
  MatrixMismatch,
  BadDomain,
  RowMismatch,
  ImagesOverlap,
  ImagesDontCover,
  NotInvariant,
  EmptyInput,
  NotDisjoint,
  NotAWitness,
  BadInput,
  PreconditionFailed,
  Overflow,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above and a
/// human-readable diagnosis naming the offending word, state, or condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sft
