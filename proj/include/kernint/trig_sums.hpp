#pragma once

// Finite sums of cosines and sines whose angles run in arithmetic
// progression, summed in closed form by telescoping after multiplication
// by 2 sin β.

namespace kernint {

struct TrigSumSpec {
    double alpha = 0.0;
    double beta = 0.0;
    int count = 1;
    double coeff_a = 1.0;
    double coeff_b = 0.0;
};

/// Below this |sin β| the closed forms refuse (DegenerateBeta).
inline constexpr double eps_den = 1e-12;

/// t = Σ_{j=1..n} cos(α + 2jβ)
double cosine_sum_t(const TrigSumSpec& spec);

/// u = Σ_{j=1..n} j cos(α + 2jβ)
double weighted_cosine_sum_u(const TrigSumSpec& spec);

/// v = Σ_{j=1..n} sin(α + (2j−1)β)
double sine_sum_v(const TrigSumSpec& spec);

/// V = Σ_{j=1..n} (a + jb) cos(α + 2jβ), from the three-fraction closed form.
double arithmetic_cosine_sum_V(const TrigSumSpec& spec);

/// Q = Σ_{j=0..n−1} ((n−2j)π − θ)/n · cos(p(θ + 2jπ)/n) = π sin(p(π−θ)/n)/sin(pπ/n).
/// The right-hand side is returned for any real p; the p → 0 limit is π − θ.
double sum_Q(int n, double p, double theta);

/// R = Σ_{j=0..n−1} ((n−2j)π − θ)/n = π − θ.
double sum_R(int n, double theta);

namespace detail {

/// Q evaluated through V with the progression constants
/// a = ((n+2)π − θ)/n, b = −2π/n, α = −p(2π − θ)/n, β = πp/n.
/// Equals the definitional sum for every real p; equals sum_Q for integer p.
double sum_Q_via_progression(int n, double p, double theta);

}  // namespace detail

}  // namespace kernint
