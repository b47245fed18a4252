#include "specmat/error.hpp"

namespace specmat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularSeries: return "SingularSeries";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace specmat
