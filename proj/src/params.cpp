#include "kernint/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kernint/errors.hpp"

namespace kernint {

namespace {

// 2π split so that k·2π can be removed without the rounding error of the
// double closest to 2π.
constexpr double two_pi_hi = 6.283185307179586;
constexpr double two_pi_lo = 2.4492935982947064e-16;

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NearPole: return "NearPole";
        case ErrorKind::SingularTheta: return "SingularTheta";
        case ErrorKind::DegenerateBeta: return "DegenerateBeta";
        case ErrorKind::NotIntegerExponents: return "NotIntegerExponents";
        case ErrorKind::Excluded: return "Excluded";
        case ErrorKind::RepeatedRoots: return "RepeatedRoots";
        case ErrorKind::BranchError: return "BranchError";
        case ErrorKind::NonIntegrable: return "NonIntegrable";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ToleranceUnreachable: return "ToleranceUnreachable";
        case ErrorKind::SlowConvergence: return "SlowConvergence";
        case ErrorKind::PoleTooClose: return "PoleTooClose";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

UpperLimit UpperLimit::finite(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::DomainError, "finite upper limit must be positive");
    }
    if (x == 1.0) {
        return one();
    }
    return {Kind::Finite, x};
}

std::string to_string(const UpperLimit& upper) {
    switch (upper.kind) {
        case UpperLimit::Kind::One: return "1";
        case UpperLimit::Kind::Infinity: return "inf";
        case UpperLimit::Kind::Finite: {
            std::ostringstream os;
            os.precision(17);
            os << upper.x;
            return os.str();
        }
    }
    return "?";
}

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::Valid: return "Valid";
        case DomainKind::BoundaryA: return "BoundaryA";
        case DomainKind::SingularTheta: return "SingularTheta";
        case DomainKind::Excluded: return "Excluded";
        case DomainKind::ParadoxOnly: return "ParadoxOnly";
    }
    return "?";
}

CanonicalTheta canonicalize_theta(double theta) {
    if (!std::isfinite(theta)) {
        throw Error(ErrorKind::DomainError, "theta must be finite");
    }
    if (theta > 0.0 && theta < two_pi_hi) {
        return {theta, false};
    }
    const double k = std::floor(theta / two_pi_hi);
    double r = std::fma(-k, two_pi_hi, theta);
    r = std::fma(-k, two_pi_lo, r);
    // floor() can be off by one when theta sits just below a multiple of 2π.
    if (r < 0.0) {
        r += two_pi_hi;
    } else if (r >= two_pi_hi) {
        r -= two_pi_hi;
    }
    const double guard = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(theta));
    if (r <= guard || two_pi_hi - r <= guard) {
        throw Error(ErrorKind::SingularTheta, "theta is a multiple of 2*pi");
    }
    return {r, true};
}

NormalizedForm normalize(const IntegrandSpec& spec) {
    double theta = spec.theta;
    try {
        theta = canonicalize_theta(spec.theta).theta;
    } catch (const Error&) {
        // left as given; classify_domain reports the problem
    }
    return {complex(pi - theta, 0.0), spec.p / spec.n, pi - spec.zeta, 1.0 / spec.n};
}

IntegrandSpec denormalize(const NormalizedForm& form) {
    IntegrandSpec spec;
    spec.n = 1.0 / form.scale;
    spec.p = form.b * spec.n;
    spec.theta = pi - form.a.real();
    spec.zeta = pi - form.c;
    return spec;
}

DomainStatus classify_domain(const IntegrandSpec& spec, ThetaPolicy policy) {
    if (!(spec.n > 0.0) || !std::isfinite(spec.n)) {
        return {DomainKind::Excluded, "Excluded: n must be positive"};
    }
    if (std::abs(spec.p.real()) >= spec.n) {
        return {DomainKind::Excluded, "Excluded: Re(p−n) ≥ 0"};
    }
    double theta = spec.theta;
    try {
        const auto canon = canonicalize_theta(spec.theta);
        if (canon.shifted && policy == ThetaPolicy::AsGiven) {
            return {DomainKind::ParadoxOnly, "ParadoxOnly: θ outside (0, 2π) used without canonicalization"};
        }
        theta = canon.theta;
    } catch (const Error&) {
        return {DomainKind::SingularTheta, "SingularTheta: θ ≡ 0 (mod 2π), value infinite"};
    }
    if (std::abs(pi - theta) < eps_lim) {
        return {DomainKind::BoundaryA, "BoundaryA: θ = π, evaluated through the a → 0 limit"};
    }
    return {DomainKind::Valid, "Valid"};
}

ScaleCheck make_scale_check(const IntegrandSpec& spec, double lambda) {
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::DomainError, "scale factor must be positive");
    }
    IntegrandSpec scaled = spec;
    scaled.n = lambda * spec.n;
    scaled.p = lambda * spec.p;
    return {lambda, spec, scaled};
}

bool has_integer_exponents(const IntegrandSpec& spec) {
    return spec.p.imag() == 0.0 && std::floor(spec.p.real()) == spec.p.real() &&
           std::floor(spec.n) == spec.n;
}

}  // namespace kernint
