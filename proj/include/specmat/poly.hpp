#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "specmat/matrix.hpp"

namespace specmat {

/// Dense univariate polynomial over complex doubles, ascending coefficients:
/// coeffs()[i] multiplies x^i. Always normalized: trailing coefficients with
/// |c| <= trim_tol are dropped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  static constexpr double trim_tol = 1e-12;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  /// x - root
  static Polynomial linear_factor(Complex root);

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i, zero past the degree.
  Complex coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Complex{}; }

 private:
  void normalize();

  std::vector<Complex> coeffs_;
};

/// A root together with its multiplicity (>= 1).
struct RootMultiplicity {
  Complex root;
  int multiplicity = 1;
};

namespace poly {

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial subtract(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& p, Complex s);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);

/// Horner evaluation at a scalar.
Complex evaluate(const Polynomial& p, Complex z);
/// Horner evaluation at a square matrix; the zero polynomial maps to the
/// zero matrix.
Matrix evaluate(const Polynomial& p, const Matrix& a);

/// Taylor re-centering: q(y) = p(y + alpha), so q's i-th coefficient is
/// p^{(i)}(alpha) / i!.
Polynomial shift(const Polynomial& p, Complex alpha);

/// Monic product of (x - root)^multiplicity; the empty product is 1.
Polynomial from_roots(std::span<const RootMultiplicity> roots);

/// Truncated power-series reciprocal: p * q == 1 (mod x^order).
/// Throws SingularSeries when |p(0)| <= trim_tol.
Polynomial series_reciprocal(const Polynomial& p, std::size_t order);

/// Remainder of a divided by b (b nonzero).
Polynomial remainder(const Polynomial& a, const Polynomial& b);

}  // namespace poly

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

}  // namespace specmat
