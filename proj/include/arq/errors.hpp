#pragma once

#include <stdexcept>
#include <string>

namespace arq {

// Machine-readable error codes. Every domain error thrown by the library
// carries exactly one of these; the CLI maps them to JSON on stderr.
enum class ErrorCode {
  RankOutOfRange,
  UnsupportedFamily,
  TreeMismatch,
  IdentityInput,
  NotWeaklyAdmissible,
  InfiniteQuotient,
  InvalidVertex,
  NotDynkinType,
  WindowOverflow,
  WindowTooLarge,
  ParseError,
  UndefinedSymbolForFamily,
  UnrecognizedGenerator,
  DOutOfRange,
  DeformationArityMismatch,
  NotInRadicalSquare,
  DegreeCapExceeded,
  NotSelfinjective,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arq
