#include "specmat/matfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specmat/error.hpp"
#include "specmat/kernels.hpp"

namespace specmat {

namespace {

Complex complex_pow(Complex base, long e) {
  if (e < 0) return 1.0 / complex_pow(base, -e);
  Complex out{1.0, 0.0};
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

ScalarFunctionTable shaped_like(const ComponentSystem& cs) {
  ScalarFunctionTable table;
  table.weights.resize(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    table.weights[j].assign(static_cast<std::size_t>(cs.index(j)), Complex{});
  }
  return table;
}

// Terms B_{jk}, k < r_j, flattened in (j, k) order.
std::vector<Matrix> truncated_terms(const ComponentSystem& cs) {
  std::vector<Matrix> terms;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(cs.index(j)); ++k) {
      terms.push_back(cs.component(j, k));
    }
  }
  return terms;
}

}  // namespace

bool on_closed_negative_axis(Complex alpha) {
  const double scale = std::max(1.0, std::abs(alpha));
  if (std::abs(alpha) <= negative_axis_tol) return true;
  return alpha.real() < 0.0 && std::abs(alpha.imag()) <= negative_axis_tol * scale;
}

double principal_arg(Complex alpha) {
  if (alpha.real() < 0.0 && std::abs(alpha.imag()) <= negative_axis_tol * std::abs(alpha)) {
    return std::numbers::pi;
  }
  return std::arg(alpha);
}

Complex BranchSelection::beta(Complex alpha, std::size_t j) const {
  if (alpha == Complex{}) throw Error(ErrorKind::SingularMatrix, "logarithm of zero eigenvalue");
  const long offset = j < offsets.size() ? offsets[j] : 0;
  return {std::log(std::abs(alpha)),
          principal_arg(alpha) + 2.0 * std::numbers::pi * static_cast<double>(offset)};
}

double generalized_binomial(long x, unsigned k) {
  double out = 1.0;
  for (unsigned i = 0; i < k; ++i) {
    out *= static_cast<double>(x - static_cast<long>(i));
    out /= static_cast<double>(i + 1);
  }
  return out;
}

Matrix combine(const ComponentSystem& cs, const ScalarFunctionTable& table) {
  if (table.weights.size() != cs.size()) {
    throw Error(ErrorKind::InvalidArgument, "weight table does not match the component system");
  }
  Matrix out(cs.order());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (table.weights[j].size() > static_cast<std::size_t>(cs.spectrum()[j].multiplicity)) {
      throw Error(ErrorKind::InvalidArgument, "weight row longer than the multiplicity");
    }
    for (std::size_t k = 0; k < table.weights[j].size(); ++k) {
      out.add_scaled(table.weights[j][k], cs.component(j, k));
    }
  }
  return out;
}

ScalarFunctionTable exponential_weights(const ComponentSystem& cs, double t) {
  ScalarFunctionTable table = shaped_like(cs);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const Complex e = std::exp(cs.spectrum()[j].alpha * t);
    double tk = 1.0;  // t^k / k!
    for (std::size_t k = 0; k < table.weights[j].size(); ++k) {
      if (k > 0) tk *= t / static_cast<double>(k);
      table.weights[j][k] = tk * e;
    }
  }
  return table;
}

ScalarFunctionTable power_weights(const ComponentSystem& cs, unsigned n) {
  ScalarFunctionTable table = shaped_like(cs);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    auto& row = table.weights[j];
    if (cs.is_zero_eigenvalue(j)) {
      // Kronecker delta: only B_{jn} survives, and only while n < r_j.
      if (n < row.size()) row[n] = 1.0;
      continue;
    }
    const Complex alpha = cs.spectrum()[j].alpha;
    for (std::size_t k = 0; k < row.size() && k <= n; ++k) {
      row[k] = generalized_binomial(static_cast<long>(n), static_cast<unsigned>(k)) *
               complex_pow(alpha, static_cast<long>(n) - static_cast<long>(k));
    }
  }
  return table;
}

ScalarFunctionTable drazin_weights(const ComponentSystem& cs, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "drazin_power requires n >= 1");
  ScalarFunctionTable table = shaped_like(cs);
  const long neg = -static_cast<long>(n);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs.is_zero_eigenvalue(j)) continue;
    const Complex alpha = cs.spectrum()[j].alpha;
    auto& row = table.weights[j];
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = generalized_binomial(neg, static_cast<unsigned>(k)) *
               complex_pow(alpha, neg - static_cast<long>(k));
    }
  }
  return table;
}

ScalarFunctionTable log_weights(const ComponentSystem& cs, const BranchSelection& branch) {
  if (!branch.offsets.empty() && branch.offsets.size() != cs.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "branch offsets: expected " + std::to_string(cs.size()) + " values, got " +
                    std::to_string(branch.offsets.size()));
  }
  ScalarFunctionTable table = shaped_like(cs);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs.is_zero_eigenvalue(j)) {
      throw Error(ErrorKind::SingularMatrix, "matrix has a zero eigenvalue; no logarithm exists");
    }
    const Complex alpha = cs.spectrum()[j].alpha;
    auto& row = table.weights[j];
    row[0] = branch.beta(alpha, j);
    Complex alpha_pow{1.0, 0.0};
    for (std::size_t k = 1; k < row.size(); ++k) {
      alpha_pow *= alpha;
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      row[k] = sign / (static_cast<double>(k) * alpha_pow);
    }
  }
  return table;
}

std::vector<Complex> canonical_basis_functions(const Spectrum& spec, double t) {
  const HermiteBasis basis = hermite_basis(spec);
  const std::size_t n = spec.total_degree();
  std::vector<Complex> y(n);
  for (std::size_t p = 0; p < spec.size(); ++p) {
    const Complex e = std::exp(spec[p].alpha * t);
    double tr = 1.0;  // t^r / r!
    for (std::size_t r = 0; r < static_cast<std::size_t>(spec[p].multiplicity); ++r) {
      if (r > 0) tr *= t / static_cast<double>(r);
      const Polynomial& l = basis.at(p, r);
      for (std::size_t i = 0; i < n; ++i) y[i] += e * tr * l.coeff(i);
    }
  }
  return y;
}

Matrix matrix_exponential(const ComponentSystem& cs, double t) {
  return combine(cs, exponential_weights(cs, t));
}

std::vector<Matrix> exponential_trajectory(const ComponentSystem& cs,
                                           std::span<const double> times) {
  const std::vector<Matrix> terms = truncated_terms(cs);
  kernels::WeightTable weights{times.size(), terms.size(), {}};
  weights.values.reserve(times.size() * terms.size());
  for (double t : times) {
    for (const auto& row : exponential_weights(cs, t).weights) {
      weights.values.insert(weights.values.end(), row.begin(), row.end());
    }
  }
  return kernels::batched_combine(terms, weights);
}

Matrix matrix_power(const ComponentSystem& cs, unsigned n) {
  return combine(cs, power_weights(cs, n));
}

Matrix drazin_power(const ComponentSystem& cs, unsigned n) {
  return combine(cs, drazin_weights(cs, n));
}

Matrix matrix_log(const ComponentSystem& cs, const BranchSelection& branch, Diagnostics* diag) {
  const ScalarFunctionTable table = log_weights(cs, branch);
  bool zero_offsets = true;
  for (long o : branch.offsets) zero_offsets = zero_offsets && o == 0;
  if (zero_offsets && diag != nullptr) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (on_closed_negative_axis(cs.spectrum()[j].alpha)) {
        diag->add(DiagnosticCode::NonPrincipalLogarithm,
                  "eigenvalue on the closed negative real axis; the result is a logarithm "
                  "but not the principal one");
        break;
      }
    }
  }
  return combine(cs, table);
}

BranchSelection log_branch_principal(const Spectrum& spec) {
  BranchSelection branch;
  branch.offsets.assign(spec.size(), 0);
  for (const auto& e : spec.entries()) {
    if (on_closed_negative_axis(e.alpha)) branch.principal = false;
  }
  return branch;
}

}  // namespace specmat
