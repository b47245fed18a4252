#include "specmat/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "specmat/error.hpp"
#include "specmat/kernels.hpp"

namespace specmat {

namespace {

void require_same_order(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::InvalidArgument, "matrix order mismatch");
  }
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t n, std::vector<Complex> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument, "matrix data length is not order^2");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidArgument, "from_rows: matrix is not square");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(n, std::move(data));
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

void Matrix::add_scaled(Complex scalar, const Matrix& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += scalar * other.data_[i];
}

void Matrix::add_identity(Complex scalar) {
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += scalar;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, Complex s) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_order(a, b);
  return kernels::multiply(a, b);
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (const auto& v : a.data()) sum += std::norm(v);
  return std::sqrt(sum);
}

Complex trace(const Matrix& a) {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.order(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_order(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double relative_frobenius_error(const Matrix& a, const Matrix& b) {
  const double denom = frobenius_norm(b);
  const double diff = frobenius_norm(a - b);
  return denom > 0.0 ? diff / denom : diff;
}

}  // namespace specmat
