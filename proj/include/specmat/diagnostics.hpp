#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specmat {

enum class DiagnosticCode {
  IllConditionedVandermonde,
  NonPrincipalLogarithm,
};

std::string_view to_string(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
};

/// Collects non-fatal numerical warnings. Functions that can emit one take
/// an optional `Diagnostics*`; passing nullptr discards them.
class Diagnostics {
 public:
  void add(DiagnosticCode code, std::string message);

  std::span<const Diagnostic> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool contains(DiagnosticCode code) const;

 private:
  std::vector<Diagnostic> entries_;
};

}  // namespace specmat
