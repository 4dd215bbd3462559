#ifndef FLATMORSE_ERROR_HPP
#define FLATMORSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flatmorse {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  NotNormalized,
  SubsetOverflow,
  NoInteriorWeight,
  IrregularWeights,
  GenusZero,
  InexactDivision,
  UnresolvedBaseCase,
  AntipodalLog,
  NoConvergence,
  SliceDimensionMismatch,
  DegenerateHessian,
  CensusMismatch,
  ActionUndefined,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flatmorse

#endif
