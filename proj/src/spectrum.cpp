#include "specmat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

namespace {

constexpr double cluster_radius_safety = 4.0;
constexpr int polish_sweeps = 2;
constexpr int max_refine_steps = 8;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void link_within(DisjointSets& sets, std::span<const Complex> roots, double threshold,
                 bool relative) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double scale =
          relative ? std::max({1.0, std::abs(roots[i]), std::abs(roots[j])}) : 1.0;
      if (std::abs(roots[i] - roots[j]) <= threshold * scale) sets.unite(i, j);
    }
  }
}

// Rounding-aware bound on |p(z)|: the caller's tolerance, or a few ulps of
// the magnitude sum when that is larger.
double residual_bound(std::span<const Complex> c, Complex z, double base) {
  double mag = 0.0;
  const double az = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) mag = mag * az + std::abs(c[i]);
  return std::max(base, 8.0 * std::numeric_limits<double>::epsilon() *
                            static_cast<double>(c.size()) * mag);
}

}  // namespace

void SpectrumOptions::validate() const {
  if (!(root_tol >= 0.0) || !(cluster_tol >= root_tol)) {
    throw Error(ErrorKind::InvalidArgument, "spectrum options require cluster_tol >= root_tol >= 0");
  }
  if (max_root_iters <= 0) {
    throw Error(ErrorKind::InvalidArgument, "max_root_iters must be positive");
  }
}

Polynomial characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  Matrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    m.add_identity(c[n - k + 1]);
    c[n - k] = -trace(a * m) / static_cast<double>(k);
  }
  // Leading 1 is never trimmed, so the degree is exactly n.
  return Polynomial(std::move(c));
}

std::vector<Complex> find_roots(const Polynomial& p, const SpectrumOptions& opts) {
  opts.validate();
  if (p.degree() < 1) {
    throw Error(ErrorKind::InvalidArgument, "find_roots: polynomial must have degree >= 1");
  }
  // Work with the monic version.
  const Polynomial monic = poly::scale(p, 1.0 / p.coeffs().back());
  const auto c = monic.coeffs();
  const auto k = static_cast<std::size_t>(monic.degree());
  if (k == 1) return {-c[0]};

  const Polynomial dp = poly::derivative(monic);
  double cmax = 0.0;
  double cinf = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < k) cmax = std::max(cmax, std::abs(c[i]));
    cinf = std::max(cinf, std::abs(c[i]));
  }
  const double base_bound = opts.root_tol * std::max(1.0, cinf) * static_cast<double>(k);

  std::vector<Complex> z(k);
  const double radius = 1.0 + cmax;
  for (std::size_t i = 0; i < k; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k) + 0.4;
    z[i] = std::polar(radius, angle);
  }

  auto converged = [&] {
    return std::all_of(z.begin(), z.end(), [&](Complex zi) {
      return std::abs(poly::evaluate(monic, zi)) <= residual_bound(c, zi, base_bound);
    });
  };

  int polish_left = -1;
  for (int iter = 0; iter < opts.max_root_iters; ++iter) {
    for (std::size_t i = 0; i < k; ++i) {
      const Complex pz = poly::evaluate(monic, z[i]);
      if (pz == Complex{}) continue;
      const Complex dpz = poly::evaluate(dp, z[i]);
      Complex s{0.0, 0.0};
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      }
      const Complex denom = dpz - pz * s;
      if (std::abs(denom) == 0.0) continue;
      z[i] -= pz / denom;
    }
    if (polish_left > 0) {
      if (--polish_left == 0) break;
    } else if (polish_left < 0 && converged()) {
      polish_left = polish_sweeps;
    }
  }
  if (!converged()) {
    throw Error(ErrorKind::NoConvergence, "Aberth iteration did not converge in " +
                                              std::to_string(opts.max_root_iters) + " sweeps");
  }
  return z;
}

Spectrum cluster_roots(std::span<const Complex> roots, const SpectrumOptions& opts) {
  opts.validate();
  const std::size_t n = roots.size();
  DisjointSets sets(n);
  link_within(sets, roots, opts.cluster_tol, false);

  if (n > 1) {
    // Candidate merges in order of distance. A group of m roots with mean c
    // is accepted when every member lies within the radius at which an
    // m-fold root of p can no longer be told apart at rounding level:
    // |q_m| r^m = eta, with q_m = p^{(m)}(c)/m!.
    std::vector<RootMultiplicity> factors;
    for (Complex r : roots) factors.push_back({r, 1});
    const Polynomial p = poly::from_roots(factors);
    const auto c = p.coeffs();
    double cinf = 0.0;
    for (Complex x : c) cinf = std::max(cinf, std::abs(x));
    // Same acceptance level as find_roots.
    const double base = opts.root_tol * std::max(1.0, cinf) * static_cast<double>(n);

    struct Edge {
      double distance;
      std::size_t i, j;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) edges.push_back({std::abs(roots[i] - roots[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.distance < b.distance; });

    for (const Edge& e : edges) {
      const std::size_t a = sets.find(e.i), b = sets.find(e.j);
      if (a == b) continue;
      std::vector<Complex> members;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = sets.find(i);
        if (r == a || r == b) members.push_back(roots[i]);
      }
      const std::size_t m = members.size();
      Complex center{};
      for (Complex z : members) center += z;
      center /= static_cast<double>(m);
      const double qm = std::abs(poly::shift(p, center).coeff(m));
      if (qm == 0.0) continue;
      const double eta = residual_bound(c, center, base);
      const double radius = cluster_radius_safety * std::pow(eta / qm, 1.0 / static_cast<double>(m));
      if (std::all_of(members.begin(), members.end(), [&](Complex z) { return std::abs(z - center) <= radius; })) {
        sets.unite(a, b);
      }
    }
  }
  DisjointSets& committed = sets;

  std::vector<Complex> sums(n);
  std::vector<int> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = committed.find(i);
    sums[r] += roots[i];
    ++counts[r];
  }
  std::vector<SpectrumEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] > 0) entries.push_back({sums[i] / static_cast<double>(counts[i]), counts[i]});
  }
  const double tie = opts.cluster_tol;
  std::sort(entries.begin(), entries.end(), [tie](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (std::abs(a.alpha.real() - b.alpha.real()) > tie) return a.alpha.real() < b.alpha.real();
    return a.alpha.imag() < b.alpha.imag();
  });
  return Spectrum(std::move(entries));
}

Spectrum refine_clusters(const Polynomial& p, const Spectrum& spec) {
  std::vector<SpectrumEntry> entries(spec.entries().begin(), spec.entries().end());
  for (std::size_t j = 0; j < entries.size(); ++j) {
    // An m-fold root of p is a simple root of p^{(m-1)}.
    Polynomial d = p;
    for (int i = 1; i < entries[j].multiplicity; ++i) d = poly::derivative(d);
    const Polynomial dd = poly::derivative(d);

    double reach = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (i != j) reach = std::min(reach, 0.25 * std::abs(entries[i].alpha - entries[j].alpha));

    const Complex start = entries[j].alpha;
    Complex z = start;
    double fz = std::abs(poly::evaluate(d, z));
    for (int iter = 0; iter < max_refine_steps && fz > 0.0; ++iter) {
      const Complex slope = poly::evaluate(dd, z);
      if (slope == Complex{}) break;
      const Complex next = z - poly::evaluate(d, z) / slope;
      const double fnext = std::abs(poly::evaluate(d, next));
      if (!(fnext < fz) || std::abs(next - start) > reach) break;
      z = next;
      fz = fnext;
    }
    entries[j].alpha = z;
  }
  return Spectrum(std::move(entries));
}

double validate_spectrum(const Matrix& a, const Spectrum& spec) {
  const std::size_t n = a.order();
  if (spec.total_degree() != n) {
    throw Error(ErrorKind::InvalidArgument, "spectrum total degree " +
                                                std::to_string(spec.total_degree()) +
                                                " does not match matrix order " + std::to_string(n));
  }
  Matrix product = Matrix::identity(n);
  for (const auto& e : spec.entries()) {
    Matrix shifted = a;
    shifted.add_identity(-e.alpha);
    for (int m = 0; m < e.multiplicity; ++m) product = product * shifted;
  }
  const double scale = std::max(1.0, std::pow(frobenius_norm(a), static_cast<double>(n)));
  return frobenius_norm(product) / scale;
}

Spectrum resolve_spectrum(const Matrix& a, const SpectrumOptions& opts) {
  opts.validate();
  Spectrum spec;
  if (opts.user_spectrum) {
    spec = *opts.user_spectrum;
    if (spec.total_degree() != a.order()) {
      throw Error(ErrorKind::SpectrumMismatch,
                  "spectrum multiplicities sum to " + std::to_string(spec.total_degree()) +
                      " but the matrix has order " + std::to_string(a.order()));
    }
  } else {
    const Polynomial chi = characteristic_polynomial(a);
    spec = refine_clusters(chi, cluster_roots(find_roots(chi, opts), opts));
  }
  require_separated(spec);
  const double residual = validate_spectrum(a, spec);
  if (!(residual <= validation_threshold)) {
    throw Error(ErrorKind::SpectrumMismatch,
                "spectrum does not annihilate the matrix (residual " + std::to_string(residual) + ")");
  }
  return spec;
}

}  // namespace specmat
