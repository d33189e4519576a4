#pragma once

// Simple-fraction decomposition of the integrand for integer n and p.
//
// With ω_k = (θ + 2kπ)/n the denominator x^{2n} − 2xⁿ cos θ + 1 factors into
// Π_k (x² − 2x cos ω_k + 1), and
//
//     (x^{n+p} − 2xⁿ cos ζ + x^{n−p}) / (x (x^{2n} − 2xⁿ cos θ + 1))
//         = Σ_k P_k / (x² − 2x cos ω_k + 1),
//     P_k = 2 sin ω_k (cos pω_k − cos ζ) / (n sin θ).

#include <utility>
#include <vector>

#include "kernint/params.hpp"

namespace kernint {

struct PartialTerm {
    double omega;
    double coeff;
};

struct Decomposition {
    IntegrandSpec spec;  // θ canonical
    std::vector<PartialTerm> terms;
};

/// ω_k = (θ + 2kπ)/n for k = 0..n−1, ascending.
std::vector<double> roots_omega(int n, double theta);

/// P = 2 sin ω (cos pω − cos ζ)/(n sin θ).
double coefficient_P(double omega, const IntegrandSpec& spec);

/// Requires integer n ≥ 1 and integer |p| < n; θ must not be π.
Decomposition decompose(const IntegrandSpec& spec);

/// Σ_k P_k / (x² − 2x cos ω_k + 1).
double reconstruct(const Decomposition& d, double x);

/// The undecomposed integrand (x^p + x^{−p} − 2 cos ζ)/(x (xⁿ + x^{−n} − 2 cos θ)),
/// for comparison with reconstruct.
double rational_integrand(const IntegrandSpec& spec, double x);

/// ∫₀^x sin ω dy/(y² − 2y cos ω + 1), the branch continuous on [0, 1]
/// starting at 0. Equals (π − ω)/2 at x = 1.
double antiderivative_term(double omega, double x);

/// ∫₀^X of the integrand as the sum of the per-root antiderivatives.
double integral_at(const IntegrandSpec& spec, double x_upper);

/// (Q − R cos ζ)/(n sin θ); doubled for an infinite upper limit.
/// θ = π is reached through its limit.
double integral_closed(const IntegrandSpec& spec);

/// ∫₀¹ x^{n−1} dx/(x^{2n} − 2xⁿ cos θ + 1) = (π − θ)/(2n sin θ).
double p_zero_reduction(double n, double theta);

struct ReductionSides {
    double lhs;
    double rhs;
};

/// Integration by parts of the θ = π kernel:
///   ∫₀^X (x^{n+p} + x^{n−p})/(1 + xⁿ)² dx/x
///     = (X^{n−p} − X^p)/(n(1 + Xⁿ)) + (p/n) ∫₀^X (x^{n−p} + x^p)/(1 + xⁿ) dx/x.
/// Both sides are evaluated by quadrature.
ReductionSides vii_reduction_identity(double n, double p, double x_upper);

}  // namespace kernint
