#pragma once

#include <cmath>

#include <doctest.h>

#include "specmat/matrix.hpp"
#include "specmat/poly.hpp"

namespace testing {

using specmat::Complex;

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline void check_coeffs(const specmat::Polynomial& p, std::initializer_list<Complex> want,
                         double tol = 1e-12) {
  CHECK(p.size() == want.size());
  std::size_t i = 0;
  for (Complex w : want) {
    CHECK_MESSAGE(close(p.coeff(i), w, tol), "coefficient ", i, ": ", p.coeff(i).real(), "+",
                  p.coeff(i).imag(), "i");
    ++i;
  }
}

}  // namespace testing
