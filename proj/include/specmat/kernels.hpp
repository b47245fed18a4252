#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// reference implementation, `omp` the OpenMP version. Both perform the same
// floating-point operations in the same order per output element, so their
// results are bit-identical; the tests rely on that.

#include <cstddef>
#include <span>
#include <vector>

#include "specmat/matrix.hpp"
#include "specmat/poly.hpp"

namespace specmat::kernels {

/// Row-major table of weights: sample s, term i lives at s * terms + i.
struct WeightTable {
  std::size_t samples = 0;
  std::size_t terms = 0;
  std::vector<Complex> values;

  Complex& operator()(std::size_t s, std::size_t i) { return values[s * terms + i]; }
  const Complex& operator()(std::size_t s, std::size_t i) const { return values[s * terms + i]; }
};

namespace serial {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t n);
std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a);
std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights);

}  // namespace serial

namespace omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t n);
std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a);
std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights);

}  // namespace omp

bool openmp_enabled();

// Dispatchers: pick the OpenMP kernel when it is compiled in and the work is
// large enough to amortize a parallel region.
inline constexpr std::size_t parallel_multiply_min_order = 64;
inline constexpr std::size_t parallel_batch_min_work = 4096;

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Matrix> evaluate_polynomials(std::span<const Polynomial> polys, const Matrix& a);
std::vector<Matrix> batched_combine(std::span<const Matrix> terms, const WeightTable& weights);

}  // namespace specmat::kernels
