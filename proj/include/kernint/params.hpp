#pragma once

// Parameters of the kernel integral
//
//     I(X) = ∫₀^X (x^{n+p} − 2xⁿ cos ζ + x^{n−p}) / (x^{2n} − 2xⁿ cos θ + 1) dx/x
//
// and its normalised half-line form (1/n) ∫₀^∞ (cosh bt + cos c)/(cosh t + cos a) dt
// with a = π − θ, b = p/n, c = π − ζ.

#include <string>

#include "kernint/scalar.hpp"

namespace kernint {

struct UpperLimit {
    enum class Kind { One, Infinity, Finite };

    Kind kind = Kind::One;
    double x = 1.0;  // only meaningful for Finite

    static UpperLimit one() { return {Kind::One, 1.0}; }
    static UpperLimit infinity() { return {Kind::Infinity, 0.0}; }
    static UpperLimit finite(double x);

    bool operator==(const UpperLimit&) const = default;
};

std::string to_string(const UpperLimit& upper);

struct IntegrandSpec {
    double n = 1.0;
    complex p{0.0, 0.0};
    double theta = pi / 2;
    double zeta = pi / 2;
    UpperLimit upper = UpperLimit::one();
};

struct NormalizedForm {
    complex a;
    complex b;
    double c = 0.0;
    double scale = 1.0;
};

struct CanonicalTheta {
    double theta;
    bool shifted;
};

enum class DomainKind { Valid, BoundaryA, SingularTheta, Excluded, ParadoxOnly };

std::string to_string(DomainKind kind);

struct DomainStatus {
    DomainKind kind;
    std::string detail;
};

/// How the evaluation layer treats θ outside (0, 2π).
enum class ThetaPolicy { Canonicalize, AsGiven };

struct ScaleCheck {
    double lambda;
    IntegrandSpec original;
    IntegrandSpec scaled;
};

/// Reduces θ into (0, 2π). Throws SingularTheta when θ ≡ 0 (mod 2π).
CanonicalTheta canonicalize_theta(double theta);

/// Pure arithmetic; θ is canonicalised when that is possible and used as
/// given otherwise. No domain rejection happens here.
NormalizedForm normalize(const IntegrandSpec& spec);

/// Inverse of normalize for a canonical θ (upper limit is One).
IntegrandSpec denormalize(const NormalizedForm& form);

DomainStatus classify_domain(const IntegrandSpec& spec,
                             ThetaPolicy policy = ThetaPolicy::Canonicalize);

/// (n, p) → (λn, λp) with θ, ζ and the upper limit kept.
ScaleCheck make_scale_check(const IntegrandSpec& spec, double lambda);

/// True when p is real (to the last bit) and an integer.
bool has_integer_exponents(const IntegrandSpec& spec);

}  // namespace kernint
