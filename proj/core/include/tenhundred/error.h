#ifndef TENHUNDRED_ERROR_H_
#define TENHUNDRED_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tenhundred {

enum class ErrorCode {
  kParse,             // malformed data file line
  kValidation,        // data file parsed but violates an invariant
  kDomain,            // argument outside the operation's domain
  kInput,             // unreadable or invalid user input (e.g. bad UTF-8)
  kDegenerateSample,  // sample cannot support a fit
  kContract,          // caller broke a precondition between two results
  kUndefined,         // quantity undefined for the given data (empty corpus)
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tenhundred

#endif  // TENHUNDRED_ERROR_H_
