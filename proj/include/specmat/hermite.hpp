#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specmat/poly.hpp"

namespace specmat {

/// Minimum distance between two spectrum entries before the Hermite
/// coefficients are considered ill-conditioned.
inline constexpr double separation_tol = 1e-6;

struct SpectrumEntry {
  Complex alpha;
  int multiplicity = 1;
};

/// Distinct eigenvalues with algebraic multiplicities. Entry order is
/// significant: every (j, k) table in the library follows it.
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws InvalidArgument when a multiplicity is < 1.
  explicit Spectrum(std::vector<SpectrumEntry> entries);
  Spectrum(std::initializer_list<SpectrumEntry> entries);

  std::span<const SpectrumEntry> entries() const { return entries_; }
  const SpectrumEntry& operator[](std::size_t j) const { return entries_[j]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// Sum of multiplicities.
  std::size_t total_degree() const;
  /// min_{i != j} |alpha_i - alpha_j|; +inf for fewer than two entries.
  double min_separation() const;
  double max_abs_alpha() const;

  /// P(x) = prod_j (x - alpha_j)^{m_j}
  Polynomial polynomial() const;
  /// Same product with entry `skip` left out.
  Polynomial polynomial_without(std::size_t skip) const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Throws DegenerateSpectrum when two entries are closer than separation_tol.
void require_separated(const Spectrum& spec);

/// The Hermite basis polynomials L_{jk}, 0 <= k < m_j, each of degree < n.
/// Indices are zero-based in spectrum order.
class HermiteBasis {
 public:
  HermiteBasis(Spectrum spec, std::vector<std::vector<Polynomial>> polys);

  const Spectrum& spectrum() const { return spec_; }
  const Polynomial& at(std::size_t j, std::size_t k) const { return polys_[j][k]; }
  std::span<const Polynomial> row(std::size_t j) const { return polys_[j]; }
  /// Total number of polynomials (equals the spectrum's total degree).
  std::size_t size() const;
  /// All polynomials flattened in (j, k) order.
  std::vector<Polynomial> flattened() const;

 private:
  Spectrum spec_;
  std::vector<std::vector<Polynomial>> polys_;
};

/// Values indexed as table[j][k], playing the role of Q^{(k)}(alpha_j).
using DerivativeTable = std::vector<std::vector<Complex>>;

HermiteBasis hermite_basis(const Spectrum& spec);

/// sum_{j,k} (values[j][k] / k!) L_{jk}. Throws MissingValue when the table
/// does not cover every (j, k) of the spectrum.
Polynomial hermite_interpolate(const Spectrum& spec, const DerivativeTable& values);
Polynomial hermite_interpolate(const HermiteBasis& basis, const DerivativeTable& values);

/// L^{(l)}(0) / l! for l = 0..deg, which is the coefficient sequence itself.
std::vector<Complex> coefficients_as_derivatives_at_zero(const Polynomial& l);

}  // namespace specmat
