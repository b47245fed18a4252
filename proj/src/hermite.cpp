#include "specmat/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity < 1) {
      throw Error(ErrorKind::InvalidArgument, "spectrum multiplicity must be >= 1");
    }
  }
}

Spectrum::Spectrum(std::initializer_list<SpectrumEntry> entries)
    : Spectrum(std::vector<SpectrumEntry>(entries)) {}

std::size_t Spectrum::total_degree() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += static_cast<std::size_t>(e.multiplicity);
  return n;
}

double Spectrum::min_separation() const {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      sep = std::min(sep, std::abs(entries_[i].alpha - entries_[j].alpha));
    }
  }
  return sep;
}

double Spectrum::max_abs_alpha() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e.alpha));
  return m;
}

Polynomial Spectrum::polynomial() const { return polynomial_without(entries_.size()); }

Polynomial Spectrum::polynomial_without(std::size_t skip) const {
  std::vector<RootMultiplicity> roots;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != skip) roots.push_back({entries_[i].alpha, entries_[i].multiplicity});
  }
  return poly::from_roots(roots);
}

void require_separated(const Spectrum& spec) {
  const double sep = spec.min_separation();
  if (sep <= separation_tol) {
    throw Error(ErrorKind::DegenerateSpectrum,
                "eigenvalues closer than " + std::to_string(separation_tol) +
                    " (min separation " + std::to_string(sep) + ")");
  }
}

HermiteBasis::HermiteBasis(Spectrum spec, std::vector<std::vector<Polynomial>> polys)
    : spec_(std::move(spec)), polys_(std::move(polys)) {}

std::size_t HermiteBasis::size() const {
  std::size_t n = 0;
  for (const auto& row : polys_) n += row.size();
  return n;
}

std::vector<Polynomial> HermiteBasis::flattened() const {
  std::vector<Polynomial> out;
  out.reserve(size());
  for (const auto& row : polys_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

namespace {

// The basis is assembled in extended precision on raw coefficient vectors
// and rounded once at the end; intermediate trimming would drop small Taylor
// coefficients of g_j.
using Wide = std::complex<long double>;
using WidePoly = std::vector<Wide>;

WidePoly wide_multiply(const WidePoly& a, const WidePoly& b) {
  WidePoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// q(y) = p(y + alpha), by repeated synthetic division.
WidePoly wide_shift(WidePoly p, Wide alpha) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += alpha * p[j];
  return p;
}

WidePoly wide_reciprocal(const WidePoly& p, std::size_t order) {
  WidePoly q(order);
  q[0] = Wide(1) / p[0];
  for (std::size_t i = 1; i < order; ++i) {
    Wide acc = 0;
    for (std::size_t l = 1; l <= i && l < p.size(); ++l) acc += p[l] * q[i - l];
    q[i] = -acc / p[0];
  }
  return q;
}

Polynomial narrow(const WidePoly& p) {
  std::vector<Complex> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    c[i] = Complex(static_cast<double>(p[i].real()), static_cast<double>(p[i].imag()));
  return Polynomial(std::move(c));
}

}  // namespace

HermiteBasis hermite_basis(const Spectrum& spec) {
  require_separated(spec);
  std::vector<std::vector<Polynomial>> polys(spec.size());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Wide alpha(spec[j].alpha.real(), spec[j].alpha.imag());
    const auto m = static_cast<std::size_t>(spec[j].multiplicity);

    WidePoly others{Wide(1)};
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (i == j) continue;
      const WidePoly factor{-Wide(spec[i].alpha.real(), spec[i].alpha.imag()), Wide(1)};
      for (int r = 0; r < spec[i].multiplicity; ++r) others = wide_multiply(others, factor);
    }
    // Taylor coefficients of g_j = 1 / P_j around alpha_j.
    const WidePoly shifted = wide_shift(others, alpha);
    if (std::abs(shifted[0]) <= Polynomial::trim_tol) {
      throw Error(ErrorKind::SingularSeries, "hermite_basis: P_j vanishes at alpha_j");
    }
    const WidePoly g = wide_reciprocal(shifted, m);
    const WidePoly factor{-alpha, Wide(1)};

    WidePoly power{Wide(1)};  // (x - alpha)^k
    polys[j].reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      // Truncated Taylor sum in y = x - alpha, moved back to x.
      const WidePoly tail = wide_shift(WidePoly(g.begin(), g.begin() + static_cast<long>(m - k)), -alpha);
      polys[j].push_back(narrow(wide_multiply(wide_multiply(others, power), tail)));
      power = wide_multiply(power, factor);
    }
  }
  return HermiteBasis(spec, std::move(polys));
}

Polynomial hermite_interpolate(const Spectrum& spec, const DerivativeTable& values) {
  return hermite_interpolate(hermite_basis(spec), values);
}

Polynomial hermite_interpolate(const HermiteBasis& basis, const DerivativeTable& values) {
  const Spectrum& spec = basis.spectrum();
  if (values.size() < spec.size()) {
    throw Error(ErrorKind::MissingValue, "hermite_interpolate: missing eigenvalue rows");
  }
  Polynomial out;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const auto m = static_cast<std::size_t>(spec[j].multiplicity);
    if (values[j].size() < m) {
      throw Error(ErrorKind::MissingValue,
                  "hermite_interpolate: row " + std::to_string(j) + " has " +
                      std::to_string(values[j].size()) + " of " + std::to_string(m) + " values");
    }
    double factorial = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (k > 0) factorial *= static_cast<double>(k);
      out = out + poly::scale(basis.at(j, k), values[j][k] / factorial);
    }
  }
  return out;
}

std::vector<Complex> coefficients_as_derivatives_at_zero(const Polynomial& l) {
  return {l.coeffs().begin(), l.coeffs().end()};
}

}  // namespace specmat
