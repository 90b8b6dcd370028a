#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "sextic/complex.hpp"

namespace sextic {

/// x^2 + a5*x + a6
struct QuadraticMonic {
  Complex a5;
  Complex a6;
};

/// x^3 + a2*x^2 + a3*x + a4
struct CubicMonic {
  Complex a2;
  Complex a3;
  Complex a4;
};

namespace detail {

// Principal cube root, argument in (-pi/3, pi/3]. A signed-zero imaginary
// part is folded to +0 so negative reals map to arg pi/3 rather than -pi/3.
inline Complex principal_cbrt(Complex z) {
  if (z == Complex(0.0)) return Complex(0.0);
  if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace detail

/// Both roots of x^2 + a5 x + a6, canonically ordered.
///
/// Uses the cancellation-free form: the square root sign is chosen to add
/// constructively to a5, and the second root comes from the product a6.
inline std::array<Complex, 2> solve_quadratic(const QuadraticMonic& q) {
  const Complex s = std::sqrt(q.a5 * q.a5 - 4.0 * q.a6);
  const Complex sum = (std::real(std::conj(q.a5) * s) >= 0.0) ? q.a5 + s : q.a5 - s;
  std::array<Complex, 2> r;
  if (sum == Complex(0.0)) {
    // a5 == 0 and a6 == 0.
    r = {Complex(0.0), Complex(0.0)};
  } else {
    const Complex first = -0.5 * sum;
    r = {first, q.a6 / first};
  }
  canonical_sort(r);
  return r;
}

/// All three roots of x^3 + a2 x^2 + a3 x + a4 by Cardano's method,
/// canonically ordered.
///
/// With x = t - a2/3 the cubic becomes t^3 + p t + q. u^3 and v^3 are the
/// two roots of w^2 + q w - p^3/27; u^3 takes the larger-magnitude one and
/// u its principal cube root. v is forced by u*v = -p/3, and the roots are
/// w^k u + w^-k v for the primitive cube root of unity w.
inline std::array<Complex, 3> solve_cubic(const CubicMonic& c) {
  const Complex shift = c.a2 / 3.0;
  const Complex p = c.a3 - c.a2 * shift;
  const Complex q = 2.0 * shift * shift * shift - shift * c.a3 + c.a4;

  const Complex disc = std::sqrt(0.25 * q * q + p * p * p / 27.0);
  const Complex half_q = -0.5 * q;
  const Complex u3 = (std::abs(half_q + disc) >= std::abs(half_q - disc)) ? half_q + disc : half_q - disc;

  Complex u(0.0), v(0.0);
  if (u3 != Complex(0.0)) {
    u = detail::principal_cbrt(u3);
    v = -p / (3.0 * u);
  }

  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  const Complex omega2 = std::conj(omega);
  std::array<Complex, 3> r = {
      u + v - shift,
      omega * u + omega2 * v - shift,
      omega2 * u + omega * v - shift,
  };
  canonical_sort(r);
  return r;
}

}  // namespace sextic
