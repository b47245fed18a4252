#include "specmat/diagnostics.hpp"

#include <algorithm>

namespace specmat {

std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::IllConditionedVandermonde: return "IllConditionedVandermonde";
    case DiagnosticCode::NonPrincipalLogarithm: return "NonPrincipalWarning";
  }
  return "Unknown";
}

void Diagnostics::add(DiagnosticCode code, std::string message) {
  entries_.push_back({code, std::move(message)});
}

bool Diagnostics::contains(DiagnosticCode code) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [code](const Diagnostic& d) { return d.code == code; });
}

}  // namespace specmat
