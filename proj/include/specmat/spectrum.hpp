#pragma once

#include <optional>
#include <span>
#include <vector>

#include "specmat/hermite.hpp"
#include "specmat/matrix.hpp"
#include "specmat/poly.hpp"

namespace specmat {

/// Residual above which a spectrum is rejected for a matrix.
inline constexpr double validation_threshold = 1e-6;

struct SpectrumOptions {
  double cluster_tol = 1e-6;
  int max_root_iters = 200;
  double root_tol = 1e-12;
  /// When set, root finding is skipped and this spectrum is only validated.
  std::optional<Spectrum> user_spectrum;

  /// Throws InvalidArgument unless cluster_tol >= root_tol >= 0 and
  /// max_root_iters > 0.
  void validate() const;
};

/// det(xI - A) via the Faddeev-LeVerrier trace recurrence; monic, degree k.
Polynomial characteristic_polynomial(const Matrix& a);

/// All deg(p) roots (with repetition) by Aberth-Ehrlich iteration from a
/// fixed start on the circle of radius 1 + max|c_i|. Throws NoConvergence
/// when the residual bound is not met within max_root_iters sweeps.
std::vector<Complex> find_roots(const Polynomial& p, const SpectrumOptions& opts);

/// Groups approximate roots into (alpha, multiplicity) entries.
///
/// Roots closer than cluster_tol are always merged (single linkage). Beyond
/// that, groups are grown in order of distance and a group of m roots with
/// mean c is accepted when all members lie within 4 (eta/|q_m|)^(1/m) of c,
/// where q_m = p^{(m)}(c)/m! for p the monic polynomial of the roots and eta
/// is the find_roots acceptance level. That is the radius an m-fold root
/// splits into under perturbations of that size.
/// Representatives are cluster means; entries are sorted by (real, imag).
Spectrum cluster_roots(std::span<const Complex> roots, const SpectrumOptions& opts);

/// Newton-polishes each cluster mean on the (m-1)-th derivative of p, where the
/// m-fold root is simple. Steps that do not reduce the residual are rejected.
Spectrum refine_clusters(const Polynomial& p, const Spectrum& spec);

/// ||prod_j (A - alpha_j I)^{m_j}||_F / max(1, ||A||_F^k). Throws
/// InvalidArgument if the spectrum's total degree is not the matrix order.
double validate_spectrum(const Matrix& a, const Spectrum& spec);

/// Full pipeline: user spectrum or characteristic polynomial + roots +
/// clustering, then validation against validation_threshold. Throws
/// SpectrumMismatch, DegenerateSpectrum or NoConvergence.
Spectrum resolve_spectrum(const Matrix& a, const SpectrumOptions& opts);

}  // namespace specmat
