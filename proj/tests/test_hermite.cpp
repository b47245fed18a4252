#include <doctest.h>

#include "specmat/error.hpp"
#include "specmat/hermite.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace specmat;
using testing::check_coeffs;

namespace {

// (1/l!) L^{(l)}(alpha), read through a shift.
Complex scaled_derivative(const Polynomial& l, Complex alpha, int order) {
  return poly::shift(l, alpha).coeff(static_cast<std::size_t>(order));
}

void check_duality(const HermiteBasis& basis, double tol) {
  const Spectrum& s = basis.spectrum();
  for (std::size_t j = 0; j < s.size(); ++j)
    for (int k = 0; k < s[j].multiplicity; ++k) {
      const Polynomial& l = basis.at(j, static_cast<std::size_t>(k));
      CHECK(l.degree() <= static_cast<int>(s.total_degree()) - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (int d = 0; d < s[i].multiplicity; ++d) {
          const double want = (i == j && d == k) ? 1.0 : 0.0;
          CHECK(std::abs(scaled_derivative(l, s[i].alpha, d) - want) <= tol);
        }
    }
}

}  // namespace

TEST_CASE("basis for a double and a simple eigenvalue") {
  const HermiteBasis b = hermite_basis(Spectrum{{2.0, 2}, {3.0, 1}});
  check_coeffs(b.at(0, 0), {-3, 4, -1});
  check_coeffs(b.at(0, 1), {-6, 5, -1});
  check_coeffs(b.at(1, 0), {4, -4, 1});
  CHECK(b.size() == 3);
}

TEST_CASE("single simple eigenvalue gives the constant 1") {
  const HermiteBasis b = hermite_basis(Spectrum{{Complex(0.3, -4), 1}});
  check_coeffs(b.at(0, 0), {1});
}

TEST_CASE("distinct eigenvalues give Lagrange polynomials") {
  const Complex a1(1, 1), a2(-2, 0), a3(0.5, -3);
  const HermiteBasis b = hermite_basis(Spectrum{{a1, 1}, {a2, 1}, {a3, 1}});
  const Complex d = (a1 - a2) * (a1 - a3);
  check_coeffs(b.at(0, 0), {a2 * a3 / d, -(a2 + a3) / d, 1.0 / d}, 1e-14);
}

TEST_CASE("degenerate spectrum is rejected") {
  try {
    hermite_basis(Spectrum{{1.0, 1}, {1.0 + 1e-8, 2}});
    FAIL("expected DegenerateSpectrum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSpectrum);
  }
}

TEST_CASE("interpolation") {
  const Spectrum s{{2.0, 2}, {3.0, 1}};
  check_coeffs(hermite_interpolate(s, {{4, 4}, {9}}), {0, 0, 1});
  CHECK(hermite_interpolate(s, {{0, 0}, {0}}).is_zero());

  // x^3: values 8, 12 at 2 and 27 at 3, against a direct linear solve.
  const Polynomial q = hermite_interpolate(s, {{8, 12}, {27}});
  const auto ref = oracle::hermite_solve(s, {{8, 12}, {27}});
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(q.coeff(i) - ref[i]) <= 1e-12);
  CHECK(std::abs(poly::evaluate(q, 2.0) - 8.0) <= 1e-12);
  CHECK(std::abs(poly::evaluate(poly::derivative(q), 2.0) - 12.0) <= 1e-12);
  CHECK(std::abs(poly::evaluate(q, 3.0) - 27.0) <= 1e-12);

  CHECK_THROWS_AS(hermite_interpolate(s, {{8}, {27}}), Error);
  CHECK_THROWS_AS(hermite_interpolate(s, {{8, 12}}), Error);
}

TEST_CASE("coefficients read as derivatives at zero") {
  const HermiteBasis b = hermite_basis(Spectrum{{2.0, 2}, {3.0, 1}});
  const auto c = coefficients_as_derivatives_at_zero(b.at(0, 0));
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Complex(-3));
  CHECK(c[1] == Complex(4));
  CHECK(c[2] == Complex(-1));
  CHECK(coefficients_as_derivatives_at_zero(Polynomial::constant(1)) == std::vector<Complex>{1});
  const auto c2 = coefficients_as_derivatives_at_zero(b.at(1, 0));
  CHECK(c2 == std::vector<Complex>{4, -4, 1});
}

TEST_CASE("property: duality conditions") {
  oracle::Generator gen(21);
  oracle::PlantOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(1, 12)), opt);
    if (s.size() > 4) continue;
    check_duality(hermite_basis(s), 1e-9);
  }
}

TEST_CASE("property: reconstruction of random polynomials") {
  oracle::Generator gen(22);
  oracle::PlantOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(1, 8)), opt);
    const Polynomial q(gen.coefficients(s.total_degree()));
    DerivativeTable values;
    for (const auto& e : s.entries()) {
      std::vector<Complex> row;
      Polynomial d = q;
      for (int k = 0; k < e.multiplicity; ++k) {
        row.push_back(poly::evaluate(d, e.alpha));
        d = poly::derivative(d);
      }
      values.push_back(row);
    }
    const Polynomial r = hermite_interpolate(s, values);
    for (std::size_t i = 0; i < s.total_degree(); ++i) CHECK(std::abs(r.coeff(i) - q.coeff(i)) <= 1e-9);
  }
}

TEST_CASE("property: cross products vanish modulo the spectrum polynomial") {
  oracle::Generator gen(23);
  oracle::PlantOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(2, 8)), opt);
    const HermiteBasis b = hermite_basis(s);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < b.row(i).size(); ++k)
          for (std::size_t l = 0; l < b.row(j).size(); ++l) {
            for (Complex c : oracle::product_remainder(b.at(i, k), b.at(j, l), s)) CHECK(std::abs(c) <= 1e-8);
          }
      }
  }
}

TEST_CASE("property: order-zero polynomials sum to one") {
  oracle::Generator gen(24);
  oracle::PlantOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(1, 8)), opt);
    const HermiteBasis b = hermite_basis(s);
    Polynomial sum;
    for (std::size_t j = 0; j < s.size(); ++j) sum = sum + b.at(j, 0);
    CHECK(std::abs(sum.coeff(0) - 1.0) <= 1e-9);
    for (std::size_t i = 1; i < s.total_degree(); ++i) CHECK(std::abs(sum.coeff(i)) <= 1e-9);
  }
}
