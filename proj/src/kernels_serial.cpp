#include <stdexcept>

#include "specmat/error.hpp"
#include "specmat/kernels.hpp"

namespace specmat::kernels::serial {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    Complex* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = Complex{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const Complex* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a) {
  std::vector<Matrix> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(poly::evaluate(p, a));
  return out;
}

std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights) {
  if (weights.terms != terms.size() || weights.values.size() != weights.samples * weights.terms) {
    throw Error(ErrorKind::InvalidArgument, "batched_combine: weight table shape mismatch");
  }
  const std::size_t n = terms.empty() ? 0 : terms.front().order();
  std::vector<Matrix> out(weights.samples, Matrix(n));
  for (std::size_t s = 0; s < weights.samples; ++s) {
    for (std::size_t i = 0; i < terms.size(); ++i) out[s].add_scaled(weights(s, i), terms[i]);
  }
  return out;
}

}  // namespace specmat::kernels::serial
