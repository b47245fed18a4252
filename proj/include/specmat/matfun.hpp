#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specmat/diagnostics.hpp"
#include "specmat/hermite.hpp"
#include "specmat/matrix.hpp"
#include "specmat/spectral.hpp"

namespace specmat {

/// Per-eigenvalue choice of logarithm branch: beta_j = ln|alpha_j| +
/// i (Arg alpha_j + 2 pi offsets[j]) with Arg in (-pi, pi].
struct BranchSelection {
  std::vector<long> offsets;
  /// True when every offset is zero and no eigenvalue lies on the closed
  /// negative real axis, i.e. the result is the principal logarithm.
  bool principal = true;

  /// Throws SingularMatrix for alpha == 0.
  Complex beta(Complex alpha, std::size_t j) const;
};

/// |Im alpha| and |alpha| tolerance for "on the closed negative real axis".
inline constexpr double negative_axis_tol = 1e-9;

bool on_closed_negative_axis(Complex alpha);

/// Arg in (-pi, pi], with points within negative_axis_tol of the negative
/// real axis mapped to +pi.
double principal_arg(Complex alpha);

/// Scalar weights c_{jk} multiplying B_{jk}; row j has r_j entries.
struct ScalarFunctionTable {
  std::vector<std::vector<Complex>> weights;
};

/// sum_{j,k} weights[j][k] B_{jk}
Matrix combine(const ComponentSystem& cs, const ScalarFunctionTable& table);

ScalarFunctionTable exponential_weights(const ComponentSystem& cs, double t);
ScalarFunctionTable power_weights(const ComponentSystem& cs, unsigned n);
ScalarFunctionTable drazin_weights(const ComponentSystem& cs, unsigned n);
ScalarFunctionTable log_weights(const ComponentSystem& cs, const BranchSelection& branch);

/// y_i(t), i = 0..n-1: the solutions of the scalar ODE with characteristic
/// polynomial prod (x - alpha_j)^{m_j} and y_i^{(l)}(0) = delta_il.
std::vector<Complex> canonical_basis_functions(const Spectrum& spec, double t);

/// e^{tA}
Matrix matrix_exponential(const ComponentSystem& cs, double t);

/// e^{tA} at every t in `times`, sharing one ComponentSystem.
std::vector<Matrix> exponential_trajectory(const ComponentSystem& cs, std::span<const double> times);

/// A^n
Matrix matrix_power(const ComponentSystem& cs, unsigned n);

/// n-th power of the Drazin inverse; throws InvalidArgument for n == 0.
Matrix drazin_power(const ComponentSystem& cs, unsigned n);

/// A logarithm of A on the selected branch. Throws SingularMatrix if an
/// eigenvalue is zero; adds NonPrincipalLogarithm when offsets are all zero
/// but some eigenvalue lies on the closed negative real axis.
Matrix matrix_log(const ComponentSystem& cs, const BranchSelection& branch,
                  Diagnostics* diag = nullptr);

/// All-zero offsets; `principal` reports whether that gives the principal log.
BranchSelection log_branch_principal(const Spectrum& spec);

/// Exact falling-factorial binomial C(x, k) for integer x (negative allowed).
double generalized_binomial(long x, unsigned k);

}  // namespace specmat
