#pragma once

// Pair-sum polynomial of a depressed quintic and the quadratic x cubic
// split it induces.
//
// If k = r_i + r_j for two roots of x^5 + C x^3 + D x^2 + E x + F, then
//   x^5 + ... = (x^2 - k x + n)(x^3 + k x^2 + l x + m)
// with n = r_i r_j, l = C - n + k^2 and n m = F. The ten pair sums are the
// roots of a monic degree-10 polynomial in k whose coefficients are
// polynomial in C, D, E, F.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/complex.hpp"
#include "sextic/polynomial.hpp"
#include "sextic/roots.hpp"

namespace sextic {

/// x^5 + C x^3 + D x^2 + E x + F
struct QuinticDepressed {
  Complex C;
  Complex D;
  Complex E;
  Complex F;

  Polynomial polynomial() const { return Polynomial{F, E, D, C, Complex(0.0), Complex(1.0)}; }

  /// Max coefficient magnitude including the leading 1.
  double scale() const {
    return std::max({1.0, std::abs(C), std::abs(D), std::abs(E), std::abs(F)});
  }
};

struct SplitFactors {
  Complex k;  // sum of the two roots of the quadratic
  Complex n;  // their product
  Complex l;
  Complex m;
  double product_residual = 0.0;  // max |coeff(quadratic*cubic - q)| / scale(q)

  Polynomial quadratic() const { return Polynomial{n, -k, Complex(1.0)}; }
  Polynomial cubic() const { return Polynomial{m, l, k, Complex(1.0)}; }
};

/// The candidate k cannot produce a split (vanishing denominator or
/// vanishing quadratic constant with no fallback).
class DegenerateSplit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The factors built from k do not multiply back to the quintic.
class SplitMismatch : public std::domain_error {
 public:
  SplitMismatch(const std::string& what, double residual) : std::domain_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

struct SplitCandidate {
  Complex k;
  double product_residual;  // infinity when the candidate was degenerate
  std::string reason;       // empty for an accepted candidate
};

/// No Martinelli root produced a valid split.
class SplitFailure : public std::runtime_error {
 public:
  SplitFailure(const std::string& what, std::vector<SplitCandidate> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}
  const std::vector<SplitCandidate>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<SplitCandidate> candidates_;
};

/// Scale-aware zero threshold for quantities of degree ~3 in k.
inline double degeneracy_threshold(Complex k, const QuinticDepressed& q) {
  const double ak = std::abs(k);
  return 1e-12 * (1.0 + ak * ak * ak) * q.scale();
}

/// n = (2(k^5 + C k^3 + D k^2 + E k) - F) / (5k^3 + C k - D).
inline Complex compute_n(Complex k, const QuinticDepressed& q) {
  const Complex k2 = k * k;
  const Complex k3 = k2 * k;
  const Complex denom = 5.0 * k3 + q.C * k - q.D;
  if (std::abs(denom) <= degeneracy_threshold(k, q)) {
    throw DegenerateSplit("pair-sum denominator 5k^3 + Ck - D vanishes");
  }
  const Complex num = 2.0 * (k3 * k2 + q.C * k3 + q.D * k2 + q.E * k) - q.F;
  return num / denom;
}

/// Monic degree-10 polynomial in k whose roots are the ten pairwise sums
/// of the quintic's roots, ascending coefficients.
inline Polynomial martinelli_coeffs(const QuinticDepressed& q) {
  const Complex C = q.C, D = q.D, E = q.E, F = q.F;
  return Polynomial{
      -F * F + F * D * C - D * D * E,
      4.0 * E * F - F * C * C - D * D * D,
      7.0 * D * F - C * D * D - 4.0 * E * E + E * C * C,
      D * C * C - 4.0 * D * E - 4.0 * C * F,
      C * C * C - D * D - 2.0 * C * E,
      2.0 * D * C - 11.0 * F,
      3.0 * C * C - 3.0 * E,
      D,
      3.0 * C,
      Complex(0.0),
      Complex(1.0),
  };
}

/// The same polynomial evaluated in its unexpanded product form:
/// (2(k^5+Ck^3+Dk^2+Ek)-F)(13k^5+6Ck^3-5Dk^2+(C^2-2E)k+F-DC)
///   - (k^4+Ck^2+Dk+E)(5k^3+Ck-D)^2
inline Complex martinelli_rational_eval(Complex k, const QuinticDepressed& q) {
  const Complex C = q.C, D = q.D, E = q.E, F = q.F;
  const Complex k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k;
  const Complex numerator = 2.0 * (k5 + C * k3 + D * k2 + E * k) - F;
  const Complex partner = 13.0 * k5 + 6.0 * C * k3 - 5.0 * D * k2 + (C * C - 2.0 * E) * k + F - D * C;
  const Complex quartic = k4 + C * k2 + D * k + E;
  const Complex denom = 5.0 * k3 + C * k - D;
  return numerator * partner - quartic * denom * denom;
}

namespace detail {

inline double product_residual(const SplitFactors& s, const QuinticDepressed& q) {
  return max_coefficient_distance(multiply(s.quadratic(), s.cubic()), q.polynomial()) / q.scale();
}

}  // namespace detail

/// Factors q as (x^2 - k x + n)(x^3 + k x^2 + l x + m) for a pair-sum root k.
///
/// When n vanishes (the pair contains a zero root, so F vanishes too), m is
/// taken from the x-coefficient identity E = n l - k m instead of m = F/n.
/// The product is checked coefficientwise against q with `tol`.
inline SplitFactors split_quintic(const QuinticDepressed& q, Complex k, const Tolerance& tol = {}) {
  SplitFactors s;
  s.k = k;
  s.n = compute_n(k, q);
  s.l = q.C - s.n + k * k;
  const double threshold = degeneracy_threshold(k, q);
  if (std::abs(s.n) > threshold) {
    s.m = q.F / s.n;
  } else if (std::abs(q.F) <= threshold && std::abs(k) > threshold) {
    s.m = (s.n * s.l - q.E) / k;
  } else {
    throw DegenerateSplit("quadratic constant term n vanishes");
  }
  s.product_residual = detail::product_residual(s, q);
  if (!coefficients_close(multiply(s.quadratic(), s.cubic()), q.polynomial(), tol)) {
    std::ostringstream msg;
    msg << "factor product does not reproduce the quintic (residual " << s.product_residual << ")";
    throw SplitMismatch(msg.str(), s.product_residual);
  }
  return s;
}

/// Tries every root of martinelli_coeffs(q) and returns the valid split with
/// the smallest product residual (ties by canonical order of k).
inline SplitFactors split_quintic_auto(const QuinticDepressed& q, const Tolerance& tol = {}) {
  RootSet pair_sums;
  try {
    pair_sums = find_roots(martinelli_coeffs(q));
  } catch (const NonConvergence& e) {
    throw SplitFailure(std::string("pair-sum roots not found: ") + e.what(), {});
  }

  struct Attempt {
    SplitCandidate report;
    SplitFactors split;
    bool built = false;
  };
  std::vector<Attempt> attempts;
  attempts.reserve(pair_sums.roots.size());
  // Build each candidate without the tolerance gate so candidates can be
  // ranked by residual; the gate is applied in ranked order below.
  const Tolerance unchecked{std::numeric_limits<double>::infinity(), 0.0};
  for (Complex k : pair_sums.roots) {
    Attempt a;
    a.report.k = k;
    try {
      a.split = split_quintic(q, k, unchecked);
      a.report.product_residual = a.split.product_residual;
      a.built = true;
    } catch (const DegenerateSplit& e) {
      a.report.product_residual = std::numeric_limits<double>::infinity();
      a.report.reason = e.what();
    }
    attempts.push_back(std::move(a));
  }
  // pair_sums is canonically ordered, so a stable sort keeps that as the tie-break.
  std::stable_sort(attempts.begin(), attempts.end(), [](const Attempt& x, const Attempt& y) {
    return x.report.product_residual < y.report.product_residual;
  });

  for (Attempt& a : attempts) {
    if (!a.built) continue;
    if (coefficients_close(multiply(a.split.quadratic(), a.split.cubic()), q.polynomial(), tol)) {
      return a.split;
    }
    a.report.reason = "factor product mismatch";
  }

  std::vector<SplitCandidate> reports;
  for (const Attempt& a : attempts) reports.push_back(a.report);
  throw SplitFailure("no pair-sum root yields a valid quadratic x cubic split", std::move(reports));
}

}  // namespace sextic
