#include "specmat/kernels.hpp"

namespace specmat::kernels {

bool openmp_enabled() {
#ifdef SPECMAT_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.order();
  Matrix out(n);
  if (openmp_enabled() && n >= parallel_multiply_min_order) {
    omp::multiply(a.data(), b.data(), out.data(), n);
  } else {
    serial::multiply(a.data(), b.data(), out.data(), n);
  }
  return out;
}

std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a) {
  const std::size_t n = a.order();
  const std::size_t work = polys.size() * n * n * n;
  if (openmp_enabled() && polys.size() > 1 && work >= parallel_batch_min_work) {
    return omp::evaluate_polynomials(polys, a);
  }
  return serial::evaluate_polynomials(polys, a);
}

std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights) {
  const std::size_t n = terms.empty() ? 0 : terms.front().order();
  const std::size_t work = weights.samples * terms.size() * n * n;
  if (openmp_enabled() && weights.samples > 1 && work >= parallel_batch_min_work) {
    return omp::batched_combine(terms, weights);
  }
  return serial::batched_combine(terms, weights);
}

}  // namespace specmat::kernels
