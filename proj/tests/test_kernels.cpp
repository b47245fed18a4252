#include <doctest.h>

#include "specmat/kernels.hpp"
#include "support/oracles.hpp"

using namespace specmat;

namespace {

Matrix random_matrix(oracle::Generator& gen, std::size_t n) {
  Matrix m(n);
  for (auto& x : m.data()) x = Complex(gen.uniform(-1, 1), gen.uniform(-1, 1));
  return m;
}

}  // namespace

TEST_CASE("multiply: serial matches the oracle, parallel matches serial bit for bit") {
  oracle::Generator gen(71);
  for (std::size_t n : {1u, 3u, 17u, 64u, 100u}) {
    const Matrix a = random_matrix(gen, n), b = random_matrix(gen, n);
    Matrix s(n), p(n);
    kernels::serial::multiply(a.data(), b.data(), s.data(), n);
    kernels::omp::multiply(a.data(), b.data(), p.data(), n);
    CHECK(s == p);
    CHECK(oracle::max_abs(s, oracle::product(a, b)) <= 1e-12 * static_cast<double>(n));
    CHECK(kernels::multiply(a, b) == s);
  }
}

TEST_CASE("polynomial evaluation: parallel matches serial") {
  oracle::Generator gen(72);
  for (std::size_t n : {2u, 8u, 40u}) {
    const Matrix a = random_matrix(gen, n);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 12; ++i) polys.emplace_back(gen.coefficients(static_cast<std::size_t>(gen.integer(1, 6))));
    polys.emplace_back();
    const auto s = kernels::serial::evaluate_polynomials(polys, a);
    const auto p = kernels::omp::evaluate_polynomials(polys, a);
    REQUIRE(s.size() == polys.size());
    CHECK(s == p);
    CHECK(kernels::evaluate_polynomials(polys, a) == s);
    for (std::size_t i = 0; i < polys.size(); ++i) CHECK(s[i] == poly::evaluate(polys[i], a));
  }
}

TEST_CASE("batched combine: parallel matches serial") {
  oracle::Generator gen(73);
  const std::size_t n = 6;
  std::vector<Matrix> terms;
  for (int i = 0; i < 5; ++i) terms.push_back(random_matrix(gen, n));
  kernels::WeightTable w;
  w.samples = 300;
  w.terms = terms.size();
  w.values = gen.coefficients(w.samples * w.terms);
  const auto s = kernels::serial::batched_combine(terms, w);
  const auto p = kernels::omp::batched_combine(terms, w);
  CHECK(s == p);
  CHECK(kernels::batched_combine(terms, w) == s);
  Matrix ref = Matrix::zero(n);
  for (std::size_t i = 0; i < terms.size(); ++i) ref.add_scaled(w(7, i), terms[i]);
  CHECK(oracle::max_abs(s[7], ref) <= 1e-14);
}
