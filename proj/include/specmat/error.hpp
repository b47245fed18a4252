#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specmat {

enum class ErrorKind {
  InvalidArgument,
  SingularSeries,
  DegenerateSpectrum,
  MissingValue,
  NoConvergence,
  SpectrumMismatch,
  SingularMatrix,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying the failure category so callers (the CLI in
/// particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace specmat
