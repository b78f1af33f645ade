#include "tenhundred/error.h"

namespace tenhundred {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInput: return "input";
    case ErrorCode::kDegenerateSample: return "degenerate-sample";
    case ErrorCode::kContract: return "contract";
    case ErrorCode::kUndefined: return "undefined";
  }
  return "unknown";
}

}  // namespace tenhundred
