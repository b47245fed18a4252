#include "specmat/vandermonde.hpp"

#include <string>

namespace specmat {

namespace {

double binomial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return out;
}

Complex int_power(Complex base, std::size_t e) {
  Complex out{1.0, 0.0};
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

bool check_conditioning(const Spectrum& spec, Diagnostics* diag) {
  const std::size_t n = spec.total_degree();
  const double amax = spec.max_abs_alpha();
  if (n <= vandermonde_order_warning && amax <= vandermonde_alpha_warning) return false;
  if (diag != nullptr) {
    diag->add(DiagnosticCode::IllConditionedVandermonde,
              "confluent Vandermonde system of order " + std::to_string(n) +
                  " with max |alpha| = " + std::to_string(amax) + " may lose accuracy");
  }
  return true;
}

ConfluentVandermonde build_confluent(const Spectrum& spec) {
  const std::size_t n = spec.total_degree();
  Matrix v(n);
  std::size_t col = 0;
  for (const auto& e : spec.entries()) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(e.multiplicity); ++j, ++col) {
      for (std::size_t i = j; i < n; ++i) v(i, col) = binomial(i, j) * int_power(e.alpha, i - j);
    }
  }
  return {spec, std::move(v)};
}

Matrix inverse_confluent(const Spectrum& spec, Diagnostics* diag) {
  check_conditioning(spec, diag);
  const HermiteBasis basis = hermite_basis(spec);
  const std::size_t n = spec.total_degree();
  Matrix inv(n);
  std::size_t row = 0;
  for (std::size_t r = 0; r < spec.size(); ++r) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec[r].multiplicity); ++i, ++row) {
      const auto coeffs = coefficients_as_derivatives_at_zero(basis.at(r, i));
      for (std::size_t c = 0; c < coeffs.size() && c < n; ++c) inv(row, c) = coeffs[c];
    }
  }
  return inv;
}

}  // namespace specmat
