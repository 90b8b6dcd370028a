#pragma once

// Sextics of the form whose roots are u_i + v_j, with u_{1,2} the roots of
// x^2 - a x + b and v_{1,2,3} the roots of x^3 + a x^2 + c x + d.
//
// Such a sextic is the degree-6 factor of the pair-sum polynomial of the
// depressed quintic (x^2 - a x + b)(x^3 + a x^2 + c x + d); the remaining
// degree-4 factor carries the within-factor sums. Solving the sextic then
// reduces to one quadratic and one cubic.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/closed_form.hpp"
#include "sextic/complex.hpp"
#include "sextic/martinelli.hpp"
#include "sextic/polynomial.hpp"

namespace sextic {

struct MilanezParams {
  Complex a;
  Complex b;
  Complex c;
  Complex d;
};

/// x^6 + p1 x^5 + p2 x^4 + p3 x^3 + p4 x^2 + p5 x + p6, stored as
/// coeffs = {p1, ..., p6}.
struct SexticMonic {
  std::array<Complex, 6> coeffs{};

  /// Normalizes p to monic; p must have degree exactly 6.
  static SexticMonic from_polynomial(const Polynomial& p) {
    if (p.degree() != 6) throw std::invalid_argument("sextic must have degree 6");
    const Polynomial monic = monic_normalize(p);
    SexticMonic s;
    for (std::size_t j = 0; j < 6; ++j) s.coeffs[j] = monic[5 - j];
    return s;
  }

  Polynomial polynomial() const {
    std::vector<Complex> asc(7);
    for (std::size_t j = 0; j < 6; ++j) asc[5 - j] = coeffs[j];
    asc[6] = Complex(1.0);
    return Polynomial(std::move(asc));
  }
};

struct SexticSolution {
  MilanezParams params;
  QuinticDepressed resolvent;
  std::array<Complex, 2> quad_roots;
  std::array<Complex, 3> cubic_roots;
  std::array<Complex, 6> roots;
  double residual_max = 0.0;  // against the input sextic
};

/// Defaults for recovery verification: coefficientwise rtol 1e-8, atol 1e-10.
inline constexpr Tolerance kRecoveryTolerance{1e-10, 1e-8};

/// The closed-form roots do not satisfy the input sextic to tolerance.
class ResidualFailure : public std::runtime_error {
 public:
  ResidualFailure(const std::string& what, SexticSolution partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const SexticSolution& partial() const noexcept { return partial_; }

 private:
  SexticSolution partial_;
};

inline SexticMonic forward(const MilanezParams& m) {
  const Complex a = m.a, b = m.b, c = m.c, d = m.d;
  const Complex a2 = a * a;
  return SexticMonic{{
      -a,
      -a2 + 3.0 * b + 2.0 * c,
      a2 * a - 2.0 * a * b - 2.0 * a * c + 2.0 * d,
      -a2 * b + c * c + 3.0 * b * b - a * d,
      -a * c * c - a * b * b + a2 * d + 2.0 * a * b * c - 6.0 * b * d + 2.0 * d * c,
      a * d * b - a * d * c - 2.0 * b * b * c + d * d + b * b * b + b * c * c,
  }};
}

/// Degree-4 cofactor: forward(m) times this equals the pair-sum polynomial
/// of resolvent_quintic(m).
inline Polynomial quartic_cofactor(const MilanezParams& m) {
  const Complex a = m.a, c = m.c, d = m.d;
  const Complex a2 = a * a;
  return Polynomial{a * d - a2 * c, -a2 * a - d, c - a2, a, Complex(1.0)};
}

inline QuinticDepressed resolvent_quintic(const MilanezParams& m) {
  return QuinticDepressed{
      -m.a * m.a + m.c + m.b,
      m.a * m.b + m.d - m.a * m.c,
      m.b * m.c - m.a * m.d,
      m.b * m.d,
  };
}

inline Polynomial quadratic_factor(const MilanezParams& m) { return Polynomial{m.b, -m.a, Complex(1.0)}; }
inline Polynomial cubic_factor(const MilanezParams& m) { return Polynomial{m.d, m.c, m.a, Complex(1.0)}; }

/// max_j |forward(m)_j - s_j| / scale(s), with scale including the leading 1.
inline double recovery_residual(const MilanezParams& m, const SexticMonic& s) {
  const SexticMonic image = forward(m);
  double scale = 1.0, worst = 0.0;
  for (std::size_t j = 0; j < 6; ++j) {
    scale = std::max(scale, std::abs(s.coeffs[j]));
    worst = std::max(worst, std::abs(image.coeffs[j] - s.coeffs[j]));
  }
  return worst / scale;
}

/// Both parameter candidates of the recovery, before verification.
///
/// a = -p1. The p2 and p3 equations give c and d linearly in b; the p4
/// equation is then (21/4) b^2 + beta b + gamma = 0.
inline std::array<MilanezParams, 2> recovery_candidates(const SexticMonic& s) {
  const auto& p = s.coeffs;
  const Complex a = -p[0];
  const Complex beta = -2.0 * p[0] * p[0] - 1.5 * p[1];
  const Complex gamma = 0.25 * p[0] * p[0] * p[0] * p[0] + 0.5 * p[0] * p[2] + 0.25 * p[1] * p[1] - p[3];
  const auto bs = solve_quadratic({beta / 5.25, gamma / 5.25});
  std::array<MilanezParams, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Complex b = bs[i];
    const Complex c = 0.5 * (p[1] + a * a - 3.0 * b);
    const Complex d = 0.5 * (p[2] + a * p[1] - a * b);
    out[i] = MilanezParams{a, b, c, d};
  }
  return out;
}

/// Parameters whose forward image matches s within tol, or nullopt when
/// neither recovery branch does.
inline std::optional<MilanezParams> recover(const SexticMonic& s, const Tolerance& tol = kRecoveryTolerance) {
  std::optional<MilanezParams> best;
  double best_residual = 0.0;
  for (const MilanezParams& m : recovery_candidates(s)) {
    const SexticMonic image = forward(m);
    bool ok = true;
    for (std::size_t j = 0; j < 6 && ok; ++j) ok = tol.close(image.coeffs[j], s.coeffs[j]);
    if (!ok) continue;
    const double r = recovery_residual(m, s);
    // Candidates arrive in canonical order of b, so strict < keeps that tie-break.
    if (!best || r < best_residual) {
      best = m;
      best_residual = r;
    }
  }
  return best;
}

/// Every u + v, canonically ordered.
inline std::array<Complex, 6> roots_from_factors(std::span<const Complex, 2> quad_roots,
                                                 std::span<const Complex, 3> cubic_roots) {
  std::array<Complex, 6> out;
  std::size_t i = 0;
  for (Complex u : quad_roots)
    for (Complex v : cubic_roots) out[i++] = u + v;
  canonical_sort(out);
  return out;
}

/// Closed-form solution of s, or nullopt when s is not of this family.
///
/// The six roots are checked against s itself; residual_max above
/// tol.rtol raises ResidualFailure.
inline std::optional<SexticSolution> solve_sextic(const SexticMonic& s, const Tolerance& tol = kRecoveryTolerance) {
  const std::optional<MilanezParams> params = recover(s, tol);
  if (!params) return std::nullopt;

  SexticSolution sol;
  sol.params = *params;
  sol.resolvent = resolvent_quintic(*params);
  sol.quad_roots = solve_quadratic({-params->a, params->b});
  sol.cubic_roots = solve_cubic({params->a, params->c, params->d});
  sol.roots = roots_from_factors(sol.quad_roots, sol.cubic_roots);

  const Polynomial poly = s.polynomial();
  for (Complex r : sol.roots) sol.residual_max = std::max(sol.residual_max, normalized_residual(poly, r));
  if (!(sol.residual_max <= tol.rtol)) {
    std::ostringstream msg;
    msg << "closed-form roots leave residual " << sol.residual_max << " above " << tol.rtol;
    throw ResidualFailure(msg.str(), sol);
  }
  return sol;
}

}  // namespace sextic
