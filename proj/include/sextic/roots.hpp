#pragma once

// Numerical root finder used as the independent reference for every
// closed-form result: Aberth-Ehrlich simultaneous iteration with
// deterministic initialization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/complex.hpp"
#include "sextic/polynomial.hpp"

namespace sextic {

struct RootSet {
  std::vector<Complex> roots;  // canonical order, multiplicity counted
  double residual_max = 0.0;   // max |p(r)| / scale(p)
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(int iterations, double residual_max)
      : std::runtime_error("root finder did not converge after " + std::to_string(iterations) +
                           " iterations (residual_max " + std::to_string(residual_max) + ")"),
        iterations_(iterations),
        residual_max_(residual_max) {}

  int iterations() const noexcept { return iterations_; }
  double residual_max() const noexcept { return residual_max_; }

 private:
  int iterations_;
  double residual_max_;
};

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr int kDefaultMaxIter = 1000;

namespace detail {

// |p(z)| at or below this bound is indistinguishable from zero in binary64
// Horner evaluation.
inline double rounding_floor(const Polynomial& p, Complex z) {
  return 8.0 * std::numeric_limits<double>::epsilon() * eval_abs(p, std::abs(z)) *
         static_cast<double>(p.coeffs().size());
}

struct HornerPair {
  Complex value;
  Complex slope;
};

inline HornerPair eval_with_derivative(const Polynomial& p, Complex z) {
  auto c = p.coeffs();
  Complex v(0.0), d(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

}  // namespace detail

/// All degree(p) roots of p.
///
/// A root is accepted when its normalized residual is <= tol, or when
/// |p(r)| has reached the rounding floor of Horner evaluation (large-root
/// and high-degree cases where tol is below attainable precision).
/// Throws NonConvergence if max_iter sweeps do not reach that state.
inline RootSet find_roots(const Polynomial& p, double tol = kDefaultRootTol,
                          int max_iter = kDefaultMaxIter) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
  const Polynomial monic = monic_normalize(p);

  // Count and factor out exact zero roots; they are exact and only slow the
  // iteration down.
  std::size_t zeros = 0;
  while (monic[zeros] == Complex(0.0)) ++zeros;
  const Polynomial work(
      std::vector<Complex>(monic.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                           monic.coeffs().end()));
  const int m = work.degree();

  std::vector<Complex> z(static_cast<std::size_t>(m));
  double radius = 0.0;
  for (std::size_t j = 0; j + 1 < work.coeffs().size(); ++j) radius = std::max(radius, std::abs(work[j]));
  radius += 1.0;
  // Golden-ratio offset keeps the start points off the real axis and off
  // any symmetry of the coefficients.
  const double offset = std::numbers::phi - 1.0;
  for (int j = 0; j < m; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / m + offset;
    z[static_cast<std::size_t>(j)] = std::polar(radius, theta);
  }

  auto accepted = [&](Complex r) {
    return normalized_residual(monic, r) <= tol ||
           std::abs(eval(work, r)) <= detail::rounding_floor(work, r);
  };

  std::vector<bool> done(z.size(), false);
  int iter = 0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (done[j]) continue;
      const auto [value, slope] = detail::eval_with_derivative(work, z[j]);
      if (std::abs(value) <= detail::rounding_floor(work, z[j])) {
        done[j] = true;
        continue;
      }
      Complex repulsion(0.0);
      for (std::size_t k = 0; k < z.size(); ++k)
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      const Complex newton = value / slope;
      Complex step = newton / (1.0 - newton * repulsion);
      if (!is_finite(step)) step = newton;
      if (!is_finite(step)) step = Complex(eps * (1.0 + std::abs(z[j])), 0.0);
      z[j] -= step;
      if (std::abs(step) <= 2.0 * eps * (1.0 + std::abs(z[j]))) {
        done[j] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  RootSet out;
  out.roots.assign(zeros, Complex(0.0));
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  for (Complex r : z) {
    if (!accepted(r)) {
      double worst = 0.0;
      for (Complex s : out.roots) worst = std::max(worst, normalized_residual(monic, s));
      throw NonConvergence(iter, worst);
    }
  }
  for (Complex r : out.roots) out.residual_max = std::max(out.residual_max, normalized_residual(monic, r));
  canonical_sort(out.roots);
  return out;
}

namespace detail {

// Kuhn's augmenting-path bipartite matching on the "within tol" graph.
inline bool augment(std::size_t a, const std::vector<std::vector<bool>>& adj, std::vector<int>& match_b,
                    std::vector<bool>& seen) {
  for (std::size_t b = 0; b < adj[a].size(); ++b) {
    if (!adj[a][b] || seen[b]) continue;
    seen[b] = true;
    if (match_b[b] < 0 || augment(static_cast<std::size_t>(match_b[b]), adj, match_b, seen)) {
      match_b[b] = static_cast<int>(a);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// True iff A and B can be paired one-to-one with every pair within tol.
inline bool multiset_match(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("multiset_match: size mismatch");

  // Greedy nearest-neighbour pass first.
  std::vector<bool> used(b.size(), false);
  bool greedy_ok = true;
  for (Complex x : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == b.size() || best_d > tol) {
      greedy_ok = false;
      break;
    }
    used[best] = true;
  }
  if (greedy_ok) return true;

  std::vector<std::vector<bool>> adj(a.size(), std::vector<bool>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) adj[i][j] = std::abs(a[i] - b[j]) <= tol;
  std::vector<int> match_b(b.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<bool> seen(b.size(), false);
    if (!detail::augment(i, adj, match_b, seen)) return false;
  }
  return true;
}

inline bool multiset_match(const RootSet& a, const RootSet& b, double tol) {
  return multiset_match(a.roots, b.roots, tol);
}

}  // namespace sextic
