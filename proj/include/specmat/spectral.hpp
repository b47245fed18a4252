#pragma once

#include <cstddef>
#include <vector>

#include "specmat/diagnostics.hpp"
#include "specmat/hermite.hpp"
#include "specmat/matrix.hpp"

namespace specmat {

/// Relative tolerance for deciding B_{jk} = 0:
/// ||B_{jk}||_F <= component_zero_tol * max(1, ||A||_F^k).
inline constexpr double component_zero_tol = 1e-7;
/// |alpha| <= zero_eigenvalue_tol * max(1, ||A||_F) counts as a zero eigenvalue.
inline constexpr double zero_eigenvalue_tol = 1e-9;

/// The component matrices B_{jk} = L_{jk}(A) of a matrix, with the index r_j
/// of every eigenvalue. Immutable once built; all matrix functions are
/// finite combinations of these.
class ComponentSystem {
 public:
  const Spectrum& spectrum() const { return spec_; }
  std::size_t order() const { return order_; }
  /// Number of distinct eigenvalues.
  std::size_t size() const { return spec_.size(); }
  /// ||A||_F of the source matrix.
  double matrix_norm() const { return norm_; }
  double validation_residual() const { return residual_; }

  /// B_{jk} for 0 <= k < m_j.
  const Matrix& component(std::size_t j, std::size_t k) const { return components_[j][k]; }
  /// r_j, the size of the largest Jordan block of alpha_j.
  int index(std::size_t j) const { return indices_[j]; }
  bool is_zero_eigenvalue(std::size_t j) const;

 private:
  friend ComponentSystem component_matrices(const Matrix& a, const Spectrum& spec,
                                            Diagnostics* diag);

  Spectrum spec_;
  std::size_t order_ = 0;
  double norm_ = 0.0;
  double residual_ = 0.0;
  std::vector<std::vector<Matrix>> components_;
  std::vector<int> indices_;
};

/// Throws SpectrumMismatch when validate_spectrum(a, spec) exceeds
/// validation_threshold, DegenerateSpectrum for nearly coincident entries.
ComponentSystem component_matrices(const Matrix& a, const Spectrum& spec,
                                   Diagnostics* diag = nullptr);

/// (B_{10}, ..., B_{s0}) in spectrum order.
std::vector<Matrix> spectral_projections(const ComponentSystem& cs);

struct JordanChevalley {
  Matrix semisimple;  // D
  Matrix nilpotent;   // N
};

/// D = sum_j alpha_j B_{j0}, N = sum_j B_{j1} over eigenvalues of index > 1.
JordanChevalley jordan_chevalley(const ComponentSystem& cs);

int eigenvalue_index(const ComponentSystem& cs, std::size_t j);
bool is_diagonalizable(const ComponentSystem& cs);

/// ||sum_j B_{j0} - I||_F
double projector_sum_residual(const ComponentSystem& cs);

}  // namespace specmat
