#pragma once

// Infinite-series forms of the x-domain integral over (0, 1].
//
// Each series is split into the exactly summable pieces Σ sin kθ/k = (π − θ)/2,
// Σ sin kθ/k³ = (π − θ)(π² − (π − θ)²)/12 and, for the one-sided series, the
// Clausen sum Σ sin kθ/k², plus a remainder Σ sin kθ · g(k) with g positive and
// decreasing, summed directly until a summation-by-parts bound on its tail
// falls below tol.

#include <cstddef>

namespace kernint {

struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    bool accelerated = true;
};

inline constexpr double series_tol_floor = 1e-13;
inline constexpr std::size_t series_max_terms = 100'000;
/// Distance from θ = 0 or 2π inside which the series are refused.
inline constexpr double series_theta_margin = 1e-3;

/// Σ_{k=0}^{K−1} x^k sin((k+1)θ), the expansion of sin θ/(1 − 2x cos θ + x²).
double recurrent_series_partial(double theta, double x, std::size_t count);

/// (1/sin θ) Σ_{k≥1} sin kθ/(kn + p) = ∫₀¹ x^p dx/x / (xⁿ − 2 cos θ + x^{−n}).
SeriesResult series_one_sided(double n, double p, double theta, double tol);

/// (2n/sin θ) Σ_{k≥1} k sin kθ/(k²n² − p²), the sum of the one-sided series at ±p.
SeriesResult series_contracted(double n, double p, double theta, double tol);

/// (2n/sin θ) Σ_{k≥1} k sin kθ/(k²n² + q²).
SeriesResult series_imaginary(double n, double q, double theta, double tol);

}  // namespace kernint
