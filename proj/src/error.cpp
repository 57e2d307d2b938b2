#include "arbelos/error.hpp"

namespace arbelos {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::ChordOutOfRange: return "ChordOutOfRange";
    case ErrorKind::NegativeRadius: return "NegativeRadius";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::PointOffDiameter: return "PointOffDiameter";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::EmptyBox: return "EmptyBox";
    case ErrorKind::InvalidOracleConfig: return "InvalidOracleConfig";
    case ErrorKind::InvalidOptions: return "InvalidOptions";
  }
  return "Unknown";
}

ArbelosError::ArbelosError(ErrorKind kind, const std::string& message)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace arbelos
