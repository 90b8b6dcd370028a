#pragma once

// Test-only helpers: seeded generators and an independent classifier for the
// u_i + v_j root structure that does not go through coefficient recovery.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sextic/sextic.hpp"

namespace sextic::testkit {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double bound) { return std::uniform_real_distribution<double>(-bound, bound)(rng_); }

  /// Uniform in the disc of radius `bound`.
  Complex complex(double bound) {
    const double r = bound * std::sqrt(std::uniform_real_distribution<double>(0.0, 1.0)(rng_));
    const double t = std::uniform_real_distribution<double>(0.0, 2.0 * 3.141592653589793)(rng_);
    return std::polar(r, t);
  }

  MilanezParams real_params(double bound) { return {real(bound), real(bound), real(bound), real(bound)}; }
  MilanezParams complex_params(double bound) {
    return {complex(bound), complex(bound), complex(bound), complex(bound)};
  }

  Polynomial real_poly(int degree, double bound) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = real(bound);
    while (c.back() == Complex(0.0)) c.back() = real(bound);
    return Polynomial(std::move(c));
  }

  Polynomial complex_poly(int degree, double bound) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = complex(bound);
    while (c.back() == Complex(0.0)) c.back() = complex(bound);
    return Polynomial(std::move(c));
  }

  Polynomial monic_real_poly(int degree, double bound) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = real(bound);
    c.back() = Complex(1.0);
    return Polynomial(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double min_pairwise_distance(std::span<const Complex> zs) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j) d = std::min(d, std::abs(zs[i] - zs[j]));
  return d;
}

/// Roots of both factors of the parameterized quintic, via the oracle.
inline std::vector<Complex> factor_roots(const MilanezParams& m) {
  auto u = find_roots(quadratic_factor(m)).roots;
  const auto v = find_roots(cubic_factor(m)).roots;
  u.insert(u.end(), v.begin(), v.end());
  return u;
}

/// True iff the six values split into triples T1, T2 with T2 = T1 + delta
/// under some bijection (each match within tol). This is exactly the root
/// pattern {u1 + v_j} and {u2 + v_j}; it is decided from the roots alone.
inline bool has_translated_triples(std::span<const Complex> r, double tol) {
  if (r.size() != 6) return false;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
    std::array<Complex, 3> t1{}, t2{};
    std::size_t i1 = 0, i2 = 0;
    for (int j = 0; j < 6; ++j) ((mask >> j) & 1 ? t1[i1++] : t2[i2++]) = r[static_cast<std::size_t>(j)];
    std::array<int, 3> perm{0, 1, 2};
    do {
      const Complex delta = t2[static_cast<std::size_t>(perm[0])] - t1[0];
      bool ok = true;
      for (std::size_t k = 1; k < 3 && ok; ++k)
        ok = std::abs(t2[static_cast<std::size_t>(perm[k])] - t1[k] - delta) <= tol;
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace sextic::testkit
