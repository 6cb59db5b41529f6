#include "ecdc/error.hpp"

namespace ecdc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedFormula: return "UNSUPPORTED_FORMULA";
    case ErrorCode::kEmptyGrid: return "EMPTY_GRID";
    case ErrorCode::kNoMinorant: return "NO_MINORANT";
    case ErrorCode::kSearchBoundsTooSmall: return "SEARCH_BOUNDS_TOO_SMALL";
    case ErrorCode::kValidation: return "VALIDATION_ERROR";
    case ErrorCode::kDisagreement: return "DISAGREEMENT";
  }
  return "UNKNOWN";
}

}  // namespace ecdc
