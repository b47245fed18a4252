#pragma once

#include "specmat/diagnostics.hpp"
#include "specmat/hermite.hpp"
#include "specmat/matrix.hpp"

namespace specmat {

/// Confluent Vandermonde matrix together with the spectrum it was built from.
/// Block k holds m_k columns; column l of block k is the l-th scaled
/// derivative (1/l!) d^l/dx^l of the monomials 1, x, ..., x^{n-1} at alpha_k.
struct ConfluentVandermonde {
  Spectrum spec;
  Matrix matrix;
};

/// Conditioning guardrail: beyond these the explicit inverse loses digits.
inline constexpr std::size_t vandermonde_order_warning = 12;
inline constexpr double vandermonde_alpha_warning = 10.0;

/// Adds an IllConditionedVandermonde diagnostic when the spectrum exceeds
/// the guardrail. Returns true when it did.
bool check_conditioning(const Spectrum& spec, Diagnostics* diag);

/// Uses 0^0 = 1, so every block starts with a unit entry even at alpha = 0.
ConfluentVandermonde build_confluent(const Spectrum& spec);

/// Explicit inverse: row i of block r is the coefficient sequence of
/// L_{r,i}, zero-padded to n. Throws DegenerateSpectrum via hermite_basis.
Matrix inverse_confluent(const Spectrum& spec, Diagnostics* diag = nullptr);

}  // namespace specmat
