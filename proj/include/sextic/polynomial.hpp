#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sextic/complex.hpp"

namespace sextic {

/// Dense univariate polynomial over Complex, coefficients in ascending
/// degree order (coeffs()[j] multiplies x^j).
///
/// Exact trailing zeros are trimmed at construction, so the zero polynomial
/// is the empty sequence and degree() is -1 for it. Coefficients must be
/// finite.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
    for (Complex c : coeffs_) require_finite(c, "Polynomial coefficient");
    trim();
  }

  Polynomial(std::initializer_list<Complex> ascending)
      : Polynomial(std::vector<Complex>(ascending)) {}

  static Polynomial from_descending(std::span<const Complex> descending) {
    return Polynomial(std::vector<Complex>(descending.rbegin(), descending.rend()));
  }

  static Polynomial constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

  /// prod (x - r_i), monic of degree roots.size().
  static Polynomial from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (Complex r : roots) {
      c.push_back(Complex(0.0));
      for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - r * c[j];
      c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^j; zero beyond the stored range.
  Complex operator[](std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : Complex(0.0);
  }

  Complex leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Max coefficient magnitude; 0 for the zero polynomial.
  double scale() const noexcept {
    double s = 0.0;
    for (Complex c : coeffs_) s = std::max(s, std::abs(c));
    return s;
  }

  std::vector<Complex> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
  }

  std::vector<Complex> coeffs_;
};

inline Complex eval(const Polynomial& p, Complex z) noexcept {
  auto c = p.coeffs();
  Complex acc(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// sum |a_j| |z|^j, the usual bound on Horner rounding error up to a
/// small multiple of machine epsilon.
inline double eval_abs(const Polynomial& p, double r) noexcept {
  auto c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

inline Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Complex> d(static_cast<std::size_t>(p.degree()));
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) d[j - 1] = static_cast<double>(j) * p[j];
  return Polynomial(std::move(d));
}

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Complex> r(p.coeffs().size() + q.coeffs().size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) r[i + j] += p[i] * q[j];
  return Polynomial(std::move(r));
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

inline Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> r(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = p[j] - q[j];
  return Polynomial(std::move(r));
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Complex> r(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = p[j] + q[j];
  return Polynomial(std::move(r));
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division: p = q * quotient + remainder, degree(remainder) < degree(q).
inline DivisionResult divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return {Polynomial{}, p};

  std::vector<Complex> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Complex> quot(static_cast<std::size_t>(p.degree() - dq + 1));
  const Complex lead = q.leading();
  for (int j = p.degree() - dq; j >= 0; --j) {
    const auto top = static_cast<std::size_t>(j + dq);
    const Complex t = rem[top] / lead;
    quot[static_cast<std::size_t>(j)] = t;
    for (int i = 0; i <= dq; ++i) rem[static_cast<std::size_t>(j + i)] -= t * q[static_cast<std::size_t>(i)];
    rem[top] = Complex(0.0);
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Scales p so its leading coefficient is exactly 1.
inline Polynomial monic_normalize(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  const Complex lead = p.leading();
  if (lead == Complex(1.0)) return p;
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  for (Complex& x : c) x /= lead;
  c.back() = Complex(1.0);
  return Polynomial(std::move(c));
}

/// max_j |p_j - q_j| over the union of stored coefficients.
inline double max_coefficient_distance(const Polynomial& p, const Polynomial& q) noexcept {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(p[j] - q[j]));
  return d;
}

inline bool coefficients_close(const Polynomial& p, const Polynomial& q, const Tolerance& tol) noexcept {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t j = 0; j < n; ++j)
    if (!tol.close(p[j], q[j])) return false;
  return true;
}

/// |p(z)| / scale(p). Invariant under rescaling p.
inline double normalized_residual(const Polynomial& p, Complex z) {
  const double s = p.scale();
  if (s == 0.0) return 0.0;
  return std::abs(eval(p, z)) / s;
}

}  // namespace sextic
