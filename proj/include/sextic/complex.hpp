#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

/// Mixed absolute/relative closeness test: |x-y| <= atol + rtol*max(|x|,|y|).
struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-9;

  bool close(Complex x, Complex y) const noexcept {
    return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
  }
};

/// Relative tie window used when grouping values with (numerically) equal
/// real parts during canonical ordering.
inline constexpr double kCanonicalTieWindow = 1e-9;

/// Sorts by ascending real part, then ascending imaginary part. Real parts
/// that agree within a small relative window are treated as ties so that
/// conjugate pairs produced by floating-point code order by imaginary part.
inline void canonical_sort(std::span<Complex> values) {
  std::sort(values.begin(), values.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  std::size_t start = 0;
  while (start < values.size()) {
    const double anchor = values[start].real();
    const double window = kCanonicalTieWindow * std::max(1.0, std::abs(anchor));
    std::size_t end = start + 1;
    while (end < values.size() && values[end].real() - anchor <= window) ++end;
    std::sort(values.begin() + static_cast<std::ptrdiff_t>(start),
              values.begin() + static_cast<std::ptrdiff_t>(end),
              [](Complex x, Complex y) { return x.imag() < y.imag(); });
    start = end;
  }
}

inline std::vector<Complex> canonical_sorted(std::vector<Complex> values) {
  canonical_sort(values);
  return values;
}

}  // namespace sextic
