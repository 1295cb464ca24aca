#pragma once

#include <cmath>
#include <complex>
#include <limits>

// Small shared numeric helpers: relative-error comparisons used across the
// library and its tests.

namespace spinflip {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// |a-b| / max(|a|,|b|), 0 when both are 0.
inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

/// Mixed absolute/relative closeness test.
inline bool approx_equal(double a, double b, double rel_tol, double abs_tol = 0.0) {
    return std::abs(a - b) <= std::max(abs_tol, rel_tol * std::max(std::abs(a), std::abs(b)));
}

inline bool approx_equal(std::complex<double> a, std::complex<double> b, double rel_tol,
                         double abs_tol = 0.0) {
    return std::abs(a - b) <= std::max(abs_tol, rel_tol * std::max(std::abs(a), std::abs(b)));
}

}  // namespace spinflip
