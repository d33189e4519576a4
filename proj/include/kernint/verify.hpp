#pragma once

// Cross-checks of the evaluation paths (closed form, partial fractions,
// quadrature, series) and two demonstrations of where the closed form stops
// describing the integral.

#include <optional>
#include <string>

#include "kernint/params.hpp"
#include "kernint/scalar.hpp"

namespace kernint {

enum class Verdict { Agree, Disagree, Skipped };

std::string to_string(Verdict verdict);

struct EvalReport {
    IntegrandSpec spec;
    NormalizedForm normalized;
    DomainStatus domain;
    std::optional<double> closed;
    std::optional<double> pf;
    std::optional<double> quad;
    std::optional<double> series;
    double max_abs_err = 0.0;
    Verdict verdict = Verdict::Skipped;
    std::string reason;  // set for Skipped, and for Disagree with fewer than two paths
};

/// Evaluates every applicable path and compares them at absolute tolerance tol.
/// With ThetaPolicy::AsGiven a θ outside (0, 2π) is fed to the closed form
/// unreduced, which is how the periodicity failure shows up in a report.
EvalReport verify_point(const IntegrandSpec& spec, double tol, ThetaPolicy policy = ThetaPolicy::AsGiven);

enum class ParadoxKind { Periodicity, ImaginaryN };

std::string to_string(ParadoxKind kind);

struct ParadoxReport {
    ParadoxKind kind = ParadoxKind::Periodicity;
    complex formula_value;
    std::optional<double> oracle_value;
    std::optional<double> mismatch;
    std::string explanation;

    bool manifested = false;
    // Periodicity
    int shift = 0;
    std::optional<double> restored_mismatch;
    // ImaginaryN
    std::optional<double> pole_t;
    std::optional<double> pole_x;
    std::optional<double> control_value;
    std::optional<double> control_quad;
};

/// Closed form at θ + 2πk without reduction against quadrature (which only
/// sees cos θ). Manifested when the mismatch exceeds 0.05 and reducing θ
/// brings it back under tol.
ParadoxReport paradox_periodicity(const IntegrandSpec& spec, int k, double tol = 1e-9);

/// Formal value of the closed form at n = mi (ζ = π/2) together with the first
/// real zero of the kernel's denominator on the integration path.
ParadoxReport paradox_imaginary_n(double m, double p, double theta);

}  // namespace kernint
