#include "specmat/error.hpp"
#include "specmat/kernels.hpp"

namespace specmat::kernels::omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t n) {
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = Complex{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

// One polynomial per thread; each evaluation uses the serial multiply so the
// regions do not nest.
std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Matrix> out(polys.size(), Matrix(n));
  const auto count = static_cast<long long>(polys.size());
#pragma omp parallel for schedule(dynamic)
  for (long long pi = 0; pi < count; ++pi) {
    const auto& coeffs = polys[static_cast<std::size_t>(pi)].coeffs();
    Matrix& result = out[static_cast<std::size_t>(pi)];
    if (coeffs.empty()) continue;
    Matrix scratch(n);
    result.add_identity(coeffs.back());
    for (std::size_t d = coeffs.size() - 1; d-- > 0;) {
      serial::multiply(result.data(), a.data(), scratch.data(), n);
      std::swap(result, scratch);
      result.add_identity(coeffs[d]);
    }
  }
  return out;
}

std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights) {
  if (weights.terms != terms.size() || weights.values.size() != weights.samples * weights.terms) {
    throw Error(ErrorKind::InvalidArgument, "batched_combine: weight table shape mismatch");
  }
  const std::size_t n = terms.empty() ? 0 : terms.front().order();
  std::vector<Matrix> out(weights.samples, Matrix(n));
  const auto samples = static_cast<long long>(weights.samples);
#pragma omp parallel for schedule(static)
  for (long long ss = 0; ss < samples; ++ss) {
    const auto s = static_cast<std::size_t>(ss);
    for (std::size_t i = 0; i < terms.size(); ++i) out[s].add_scaled(weights(s, i), terms[i]);
  }
  return out;
}

}  // namespace specmat::kernels::omp
