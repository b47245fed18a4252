#include "specmat/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(Complex root) { return Polynomial({-root, Complex{1.0}}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= trim_tol) coeffs_.pop_back();
}

namespace poly {

Polynomial add(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial subtract(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, Complex s) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return {};
  std::vector<Complex> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = static_cast<double>(i) * p.coeffs()[i];
  return Polynomial(std::move(out));
}

Complex evaluate(const Polynomial& p, Complex z) {
  Complex acc{0.0, 0.0};
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  const auto c = p.coeffs();
  Matrix result(a.order());
  if (c.empty()) return result;
  result.add_identity(c.back());
  for (std::size_t d = c.size() - 1; d-- > 0;) {
    result = result * a;
    result.add_identity(c[d]);
  }
  return result;
}

Polynomial shift(const Polynomial& p, Complex alpha) {
  // Repeated synthetic division by (x - alpha), accumulated in long double
  // and rounded once.
  using Wide = std::complex<long double>;
  const Wide a(alpha.real(), alpha.imag());
  std::vector<Wide> w(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) w[j] += a * w[j + 1];
  }
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = Complex(static_cast<double>(w[i].real()), static_cast<double>(w[i].imag()));
  return Polynomial(std::move(c));
}

Polynomial from_roots(std::span<const RootMultiplicity> roots) {
  Polynomial out = Polynomial::constant(1.0);
  for (const auto& r : roots) {
    if (r.multiplicity < 1) {
      throw Error(ErrorKind::InvalidArgument, "from_roots: multiplicity must be >= 1");
    }
    const Polynomial factor = Polynomial::linear_factor(r.root);
    for (int m = 0; m < r.multiplicity; ++m) out = multiply(out, factor);
  }
  return out;
}

Polynomial series_reciprocal(const Polynomial& p, std::size_t order) {
  const Complex p0 = p.coeff(0);
  if (std::abs(p0) <= Polynomial::trim_tol) {
    throw Error(ErrorKind::SingularSeries,
                "series_reciprocal: constant term is zero (|p0| = " + std::to_string(std::abs(p0)) +
                    ")");
  }
  std::vector<Complex> q(order);
  if (order == 0) return {};
  q[0] = 1.0 / p0;
  for (std::size_t i = 1; i < order; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t l = 1; l <= i; ++l) acc += p.coeff(l) * q[i - l];
    q[i] = -acc / p0;
  }
  return Polynomial(std::move(q));
}

Polynomial remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "remainder: division by zero polynomial");
  std::vector<Complex> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.size() - 1;
  const Complex lead = b.coeffs().back();
  while (r.size() > db && !r.empty()) {
    const Complex factor = r.back() / lead;
    const std::size_t offset = r.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) r[offset + i] -= factor * b.coeffs()[i];
    r.pop_back();
  }
  return Polynomial(std::move(r));
}

}  // namespace poly

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly::add(a, b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly::subtract(a, b); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly::multiply(a, b); }

}  // namespace specmat
