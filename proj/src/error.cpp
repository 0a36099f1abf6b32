#include "sft/error.hpp"

namespace sft {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ConditionIFails: return "ConditionIFails";
    case ErrorCode::InadmissibleWord: return "InadmissibleWord";
    case ErrorCode::MatrixMismatch: return "MatrixMismatch";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::RowMismatch: return "RowMismatch";
    case ErrorCode::ImagesOverlap: return "ImagesOverlap";
    case ErrorCode::ImagesDontCover: return "ImagesDontCover";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sft
