#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specmat {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of order n.
  explicit Matrix(std::size_t n);
  /// Takes ownership of row-major data; throws InvalidArgument if
  /// data.size() != n * n.
  Matrix(std::size_t n, std::vector<Complex> data);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n); }
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix diagonal(std::span<const Complex> diag);

  std::size_t order() const { return n_; }
  bool empty() const { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar);

  /// this += scalar * other
  void add_scaled(Complex scalar, const Matrix& other);
  /// this += scalar * I
  void add_identity(Complex scalar);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
Matrix operator*(Matrix a, Complex s);
Matrix operator*(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
Complex trace(const Matrix& a);
/// max_{i,j} |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);
/// ||a - b||_F / ||b||_F, or the absolute error when b is zero.
double relative_frobenius_error(const Matrix& a, const Matrix& b);

}  // namespace specmat
