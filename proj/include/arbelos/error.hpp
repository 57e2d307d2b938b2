#pragma once

#include <stdexcept>
#include <string>

namespace arbelos {

enum class ErrorKind {
  NonPositiveRadius,
  ChordOutOfRange,
  NegativeRadius,
  ParameterOutOfRange,
  PointOffDiameter,
  DegenerateTriangle,
  EmptyBox,
  InvalidOracleConfig,
  InvalidOptions,
};

const char* to_string(ErrorKind kind) noexcept;

/// Raised for every rejected input. The kind identifies which contract was
/// violated; what() carries a human readable message prefixed by the kind.
class ArbelosError : public std::invalid_argument {
 public:
  ArbelosError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arbelos
