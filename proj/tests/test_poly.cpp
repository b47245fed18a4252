#include <doctest.h>

#include "specmat/error.hpp"
#include "specmat/poly.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace specmat;
using testing::check_coeffs;

TEST_CASE("add") {
  check_coeffs(Polynomial{1, 1} + Polynomial{0, -1}, {1});
  const Polynomial p{3, -2, 5};
  check_coeffs(Polynomial{} + p, {3, -2, 5});
  check_coeffs(Polynomial{4, -4, 1} + Polynomial{-1, 3}, {3, -1, 1});
  CHECK((Polynomial{0, 1} - Polynomial{0, 1}).is_zero());
}

TEST_CASE("multiply") {
  check_coeffs(Polynomial{-2, 1} * Polynomial{-2, 1}, {4, -4, 1});
  const Polynomial p{Complex(1, 2), 3, -1};
  check_coeffs(p * Polynomial::constant(1), {Complex(1, 2), 3, -1});
  CHECK((p * Polynomial{}).is_zero());
}

TEST_CASE("derivative") {
  check_coeffs(poly::derivative(Polynomial{4, -4, 1}), {-4, 2});
  CHECK(poly::derivative(Polynomial::constant(7)).is_zero());
  const Polynomial d = poly::derivative(Polynomial{-3, 4, -1});
  check_coeffs(d, {4, -2});
  CHECK(poly::evaluate(d, 0.0) == Complex(4));
}

TEST_CASE("scalar evaluation") {
  CHECK(poly::evaluate(Polynomial{-3, 4, -1}, 0.0) == Complex(-3));
  CHECK(poly::evaluate(Polynomial{Complex(2, -1), 5}, 0.0) == Complex(2, -1));
  CHECK(poly::evaluate(Polynomial{4, -4, 1}, 2.0) == Complex(0));
  CHECK(poly::evaluate(Polynomial{}, Complex(3, 1)) == Complex(0));
}

TEST_CASE("matrix evaluation") {
  const Matrix a = Matrix::from_rows({{2, 0, 1}, {0, 2, 0}, {0, 0, 3}});
  CHECK(poly::evaluate(Polynomial{0, 1}, a) == a);
  CHECK(poly::evaluate(Polynomial{-3, 4, -1}, a) == Matrix::from_rows({{1, 0, -1}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(poly::evaluate(Polynomial{}, a) == Matrix::zero(3));
  // Cayley-Hamilton with a direct product as the reference.
  const Matrix i3 = Matrix::identity(3);
  const Matrix ref = oracle::product(oracle::product(a - 2.0 * i3, a - 2.0 * i3), a - 3.0 * i3);
  CHECK(oracle::max_abs(poly::evaluate(Polynomial{-12, 16, -7, 1}, a), ref) == 0.0);
}

TEST_CASE("shift") {
  check_coeffs(poly::shift(Polynomial{0, 0, 1}, 1.0), {1, 2, 1});
  check_coeffs(poly::shift(Polynomial{3, Complex(0, 1), 2}, 0.0), {3, Complex(0, 1), 2});
  check_coeffs(poly::shift(Polynomial{4, -4, 1}, 2.0), {0, 0, 1});
}

TEST_CASE("from roots") {
  const std::vector<RootMultiplicity> r{{2.0, 2}, {3.0, 1}};
  check_coeffs(poly::from_roots(r), {-12, 16, -7, 1});
  const std::vector<RootMultiplicity> single{{Complex(1, -2), 1}};
  check_coeffs(poly::from_roots(single), {Complex(-1, 2), 1});
  check_coeffs(poly::from_roots({}), {1});
}

TEST_CASE("series reciprocal") {
  check_coeffs(poly::series_reciprocal(Polynomial{1, -1}, 4), {1, 1, 1, 1});
  check_coeffs(poly::series_reciprocal(Polynomial::constant(4), 1), {0.25});
  check_coeffs(poly::series_reciprocal(poly::shift(Polynomial{-3, 1}, 2.0), 2), {-1, -1});
  CHECK_THROWS_AS(poly::series_reciprocal(Polynomial{0, 1}, 3), Error);
  try {
    poly::series_reciprocal(Polynomial{1e-14, 1}, 3);
    FAIL("expected SingularSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularSeries);
  }
}

TEST_CASE("remainder") {
  // (x^3 + 1) mod (x - 1) = 2
  check_coeffs(poly::remainder(Polynomial{1, 0, 0, 1}, Polynomial{-1, 1}), {2});
  CHECK(poly::remainder(Polynomial{-2, 1}, Polynomial{-12, 16, -7, 1}).degree() == 1);
}

TEST_CASE("property: reciprocal times p is 1 modulo x^m") {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = gen.integer(0, 8);
    auto c = gen.coefficients(static_cast<std::size_t>(deg) + 1);
    if (std::abs(c[0]) < 0.5) c[0] = c[0] / std::abs(c[0]) * 0.5 + c[0];
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 8));
    const Polynomial p(c);
    const Polynomial q = poly::series_reciprocal(p, m);
    const Polynomial prod = p * q;
    for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(prod.coeff(i) - (i == 0 ? 1.0 : 0.0)) <= 1e-12);
  }
}

// Round-trip error grows like eps (1 + |alpha|)^(2 deg); at |alpha| <= 4 the
// 1e-12 bound holds through degree 4.
TEST_CASE("property: shift round trip") {
  oracle::Generator gen(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p(gen.coefficients(static_cast<std::size_t>(gen.integer(1, 5))));
    Complex a;
    do {
      a = Complex(gen.uniform(-4, 4), gen.uniform(-4, 4));
    } while (std::abs(a) > 4);
    const Polynomial back = poly::shift(poly::shift(p, a), -a);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(back.coeff(i) - p.coeff(i)) <= 1e-12);
  }
}

TEST_CASE("property: from_roots vanishes at its roots") {
  oracle::Generator gen(13);
  oracle::PlantOptions opt;
  opt.radius = 4.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(1, 6)), opt);
    std::vector<RootMultiplicity> roots;
    for (const auto& e : s.entries()) roots.push_back({e.alpha, e.multiplicity});
    const Polynomial p = poly::from_roots(roots);
    for (const auto& e : s.entries()) CHECK(std::abs(poly::evaluate(p, e.alpha)) <= 1e-10);
  }
}

TEST_CASE("property: matrix evaluation on a diagonal matches scalar evaluation") {
  oracle::Generator gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p(gen.coefficients(static_cast<std::size_t>(gen.integer(1, 7))));
    const auto diag = gen.coefficients(static_cast<std::size_t>(gen.integer(1, 6)));
    const Matrix m = poly::evaluate(p, Matrix::diagonal(diag));
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(std::abs(m(i, i) - poly::evaluate(p, diag[i])) <= 1e-13);
      for (std::size_t j = 0; j < diag.size(); ++j)
        if (i != j) CHECK(m(i, j) == Complex(0));
    }
  }
}
