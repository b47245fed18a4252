#include "specmat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specmat/error.hpp"
#include "specmat/kernels.hpp"
#include "specmat/spectrum.hpp"
#include "specmat/vandermonde.hpp"

namespace specmat {

bool ComponentSystem::is_zero_eigenvalue(std::size_t j) const {
  return std::abs(spec_[j].alpha) <= zero_eigenvalue_tol * std::max(1.0, norm_);
}

ComponentSystem component_matrices(const Matrix& a, const Spectrum& spec, Diagnostics* diag) {
  if (spec.total_degree() != a.order()) {
    throw Error(ErrorKind::SpectrumMismatch,
                "spectrum multiplicities sum to " + std::to_string(spec.total_degree()) +
                    " but the matrix has order " + std::to_string(a.order()));
  }
  const double residual = validate_spectrum(a, spec);
  if (!(residual <= validation_threshold)) {
    throw Error(ErrorKind::SpectrumMismatch,
                "spectrum does not annihilate the matrix (residual " + std::to_string(residual) + ")");
  }
  check_conditioning(spec, diag);

  const HermiteBasis basis = hermite_basis(spec);
  const std::vector<Polynomial> flat = basis.flattened();
  std::vector<Matrix> evaluated = kernels::evaluate_polynomials(flat, a);

  ComponentSystem cs;
  cs.spec_ = spec;
  cs.order_ = a.order();
  cs.norm_ = frobenius_norm(a);
  cs.residual_ = residual;
  cs.components_.resize(spec.size());
  cs.indices_.resize(spec.size(), 1);

  std::size_t pos = 0;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto m = static_cast<std::size_t>(spec[j].multiplicity);
    for (std::size_t k = 0; k < m; ++k) cs.components_[j].push_back(std::move(evaluated[pos++]));
    for (std::size_t k = m; k-- > 1;) {
      const double scale = std::max(1.0, std::pow(cs.norm_, static_cast<double>(k)));
      if (frobenius_norm(cs.components_[j][k]) > component_zero_tol * scale) {
        cs.indices_[j] = static_cast<int>(k) + 1;
        break;
      }
    }
  }
  return cs;
}

std::vector<Matrix> spectral_projections(const ComponentSystem& cs) {
  std::vector<Matrix> out;
  out.reserve(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) out.push_back(cs.component(j, 0));
  return out;
}

JordanChevalley jordan_chevalley(const ComponentSystem& cs) {
  JordanChevalley jc{Matrix(cs.order()), Matrix(cs.order())};
  for (std::size_t j = 0; j < cs.size(); ++j) {
    jc.semisimple.add_scaled(cs.spectrum()[j].alpha, cs.component(j, 0));
    if (cs.index(j) > 1) jc.nilpotent += cs.component(j, 1);
  }
  return jc;
}

int eigenvalue_index(const ComponentSystem& cs, std::size_t j) {
  if (j >= cs.size()) throw Error(ErrorKind::InvalidArgument, "eigenvalue index out of range");
  return cs.index(j);
}

bool is_diagonalizable(const ComponentSystem& cs) {
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs.index(j) != 1) return false;
  }
  return true;
}

double projector_sum_residual(const ComponentSystem& cs) {
  Matrix sum(cs.order());
  for (std::size_t j = 0; j < cs.size(); ++j) sum += cs.component(j, 0);
  sum.add_identity(-1.0);
  return frobenius_norm(sum);
}

}  // namespace specmat
