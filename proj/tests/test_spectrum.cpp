#include <algorithm>
#include <numbers>

#include <doctest.h>

#include "specmat/error.hpp"
#include "specmat/spectrum.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace specmat;
using testing::check_coeffs;

namespace {

const Matrix example = Matrix::from_rows({{2, 0, 1}, {0, 2, 0}, {0, 0, 3}});
const Matrix drazin1 = Matrix::from_rows({{2, 0, 0}, {-1, 1, 1}, {-1, -1, -1}});

void check_spectrum(const Spectrum& got, const Spectrum& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t j = 0; j < got.size(); ++j) {
    CHECK(std::abs(got[j].alpha - want[j].alpha) <= tol);
    CHECK(got[j].multiplicity == want[j].multiplicity);
  }
}

}  // namespace

TEST_CASE("characteristic polynomial") {
  check_coeffs(characteristic_polynomial(example), {-12, 16, -7, 1});
  check_coeffs(characteristic_polynomial(Matrix::zero(4)), {0, 0, 0, 0, 1});
  check_coeffs(characteristic_polynomial(drazin1), {0, 0, -2, 1});
}

TEST_CASE("roots") {
  const SpectrumOptions opts;
  const auto double_root = find_roots(Polynomial{4, -4, 1}, opts);
  check_spectrum(cluster_roots(double_root, opts), Spectrum{{2.0, 2}}, 1e-7);

  const auto r3 = find_roots(Polynomial{-12, 16, -7, 1}, opts);
  CHECK(r3.size() == 3);
  check_spectrum(cluster_roots(r3, opts), Spectrum{{2.0, 2}, {3.0, 1}}, 1e-7);

  // x^2 (x^2 - 4x + 2)
  const Polynomial p4{0, 0, 2, -4, 1};
  const double s2 = std::numbers::sqrt2;
  check_spectrum(refine_clusters(p4, cluster_roots(find_roots(p4, opts), opts)), Spectrum{{0.0, 2}, {2 - s2, 1}, {2 + s2, 1}}, 1e-8);
}

TEST_CASE("no convergence") {
  SpectrumOptions opts;
  opts.max_root_iters = 1;
  try {
    find_roots(Polynomial{1, 2, 3, 4, 5, 6, 1}, opts);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("clustering") {
  const SpectrumOptions opts;
  const std::vector<Complex> a{2.0 + 1e-9, 2.0 - 1e-9, 3.0};
  check_spectrum(cluster_roots(a, opts), Spectrum{{2.0, 2}, {3.0, 1}}, 1e-15);
  const std::vector<Complex> b{5.0};
  check_spectrum(cluster_roots(b, opts), Spectrum{{5.0, 1}}, 0);
  const std::vector<Complex> c{0.0, 1e-13, 3.41421356, 0.58578644};
  const double s2 = std::numbers::sqrt2;
  check_spectrum(cluster_roots(c, opts), Spectrum{{0.0, 2}, {2 - s2, 1}, {2 + s2, 1}}, 1e-8);
}

TEST_CASE("validation residual") {
  CHECK(validate_spectrum(example, Spectrum{{2.0, 2}, {3.0, 1}}) <= 1e-10);
  CHECK(validate_spectrum(Matrix::identity(4), Spectrum{{1.0, 4}}) == 0.0);
  CHECK(validate_spectrum(example, Spectrum{{2.0, 3}}) >= 1e-2);
  CHECK_THROWS_AS(validate_spectrum(example, Spectrum{{2.0, 2}}), Error);
}

TEST_CASE("resolve spectrum") {
  SpectrumOptions opts;
  check_spectrum(resolve_spectrum(example, opts), Spectrum{{2.0, 2}, {3.0, 1}}, 1e-7);

  opts.user_spectrum = Spectrum{{3.0, 1}, {2.0, 2}};
  const Spectrum user = resolve_spectrum(example, opts);
  CHECK(user[0].alpha == Complex(3.0));

  opts.user_spectrum = Spectrum{{2.0, 3}};
  try {
    resolve_spectrum(example, opts);
    FAIL("expected SpectrumMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpectrumMismatch);
  }
}

TEST_CASE("refinement sharpens multiple roots") {
  const SpectrumOptions opts;
  const std::vector<RootMultiplicity> planted{{Complex(1.5, -0.5), 3}, {-2.0, 2}, {0.25, 1}};
  const Polynomial p = poly::from_roots(planted);
  const Spectrum rough = cluster_roots(find_roots(p, opts), opts);
  const Spectrum fine = refine_clusters(p, rough);
  REQUIRE(fine.size() == 3);
  for (std::size_t j = 0; j < fine.size(); ++j) {
    double best = 1e9;
    for (const auto& r : planted) best = std::min(best, std::abs(r.root - fine[j].alpha));
    CHECK(best <= 1e-12);
    CHECK(fine[j].multiplicity == rough[j].multiplicity);
  }
}

TEST_CASE("options are validated") {
  SpectrumOptions opts;
  opts.cluster_tol = 1e-14;
  CHECK_THROWS_AS(opts.validate(), Error);
}

TEST_CASE("property: Cayley-Hamilton for random matrices") {
  oracle::Generator gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 6));
    Matrix a(k);
    for (auto& x : a.data()) x = Complex(gen.uniform(-2, 2), gen.uniform(-2, 2));
    const Polynomial chi = characteristic_polynomial(a);
    CHECK(chi.degree() == static_cast<int>(k));
    // Horner through the Eigen oracle product.
    Matrix acc = Matrix::zero(k);
    for (int i = chi.degree(); i >= 0; --i) {
      acc = oracle::product(acc, a);
      acc.add_identity(chi.coeff(static_cast<std::size_t>(i)));
    }
    const double scale = std::max(1.0, std::pow(frobenius_norm(a), static_cast<double>(k)));
    CHECK(frobenius_norm(acc) <= 1e-8 * scale);
  }
}

TEST_CASE("property: planted roots are recovered") {
  oracle::Generator gen(42);
  oracle::PlantOptions opt;
  const SpectrumOptions opts;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = gen.spectrum(static_cast<std::size_t>(gen.integer(1, 8)), opt);
    const Polynomial p = s.polynomial();
    const Spectrum got = refine_clusters(p, cluster_roots(find_roots(p, opts), opts));
    REQUIRE(got.size() == s.size());
    std::size_t total = 0;
    for (const auto& e : got.entries()) total += static_cast<std::size_t>(e.multiplicity);
    CHECK(total == s.total_degree());
    for (const auto& want : s.entries()) {
      const auto it = std::min_element(got.entries().begin(), got.entries().end(), [&](const auto& x, const auto& y) {
        return std::abs(x.alpha - want.alpha) < std::abs(y.alpha - want.alpha);
      });
      CHECK(std::abs(it->alpha - want.alpha) <= 1e-6);
      CHECK(it->multiplicity == want.multiplicity);
    }
  }
}

TEST_CASE("property: validation ignores entry order") {
  oracle::Generator gen(43);
  oracle::PlantOptions opt;
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = gen.planted(static_cast<std::size_t>(gen.integer(2, 6)), opt);
    std::vector<SpectrumEntry> rev(p.spec.entries().rbegin(), p.spec.entries().rend());
    const double a = validate_spectrum(p.a, p.spec);
    const double b = validate_spectrum(p.a, Spectrum(rev));
    CHECK(std::abs(a - b) <= 1e-12);
  }
}
