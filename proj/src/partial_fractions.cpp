#include "kernint/partial_fractions.hpp"

#include <cmath>
#include <limits>

#include "kernint/errors.hpp"
#include "kernint/quadrature.hpp"
#include "kernint/scalar.hpp"
#include "kernint/trig_sums.hpp"

namespace kernint {

namespace {

struct IntegerSpec {
    int n;
    int p;
    double theta;  // canonical
};

IntegerSpec require_integer(const IntegrandSpec& spec) {
    if (!has_integer_exponents(spec) || spec.n < 1.0) {
        throw Error(ErrorKind::NotIntegerExponents, "decomposition needs integer n >= 1 and integer p");
    }
    const int n = static_cast<int>(spec.n);
    const int p = static_cast<int>(spec.p.real());
    if (std::abs(p) >= n) {
        throw Error(ErrorKind::Excluded, "improper fraction: |p| >= n");
    }
    return {n, p, canonicalize_theta(spec.theta).theta};
}

// cos(p ω_k) with p ω_k = pθ/n + 2π (pk mod n)/n, the whole turns removed exactly.
double cos_p_omega(int n, int p, double theta, int k) {
    const long long pk = ((static_cast<long long>(p) * k) % n + n) % n;
    return std::cos(p * theta / n + two_pi * static_cast<double>(pk) / n);
}

// x² − 2x cos ω + 1 without cancellation near x = cos ω
double quadratic_factor(double x, double omega) {
    const double d = x - std::cos(omega);
    const double s = std::sin(omega);
    return d * d + s * s;
}

}  // namespace

std::vector<double> roots_omega(int n, double theta) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "n must be >= 1");
    }
    if (!(theta > 0.0 && theta < two_pi)) {
        throw Error(ErrorKind::DomainError, "θ must lie in (0, 2π)");
    }
    std::vector<double> omegas(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        omegas[static_cast<std::size_t>(k)] = (theta + two_pi * k) / n;
    }
    return omegas;
}

double coefficient_P(double omega, const IntegrandSpec& spec) {
    const double theta = canonicalize_theta(spec.theta).theta;
    if (!has_integer_exponents(spec)) {
        throw Error(ErrorKind::NotIntegerExponents, "coefficient needs integer p");
    }
    const double p = spec.p.real();
    return 2.0 * std::sin(omega) * (std::cos(p * omega) - std::cos(spec.zeta)) / (spec.n * std::sin(theta));
}

Decomposition decompose(const IntegrandSpec& spec) {
    const IntegerSpec is = require_integer(spec);
    // π + 2πk canonicalizes to within a few ulps of π
    if (std::abs(is.theta - pi) <= 8 * std::numeric_limits<double>::epsilon() * pi) {
        throw Error(ErrorKind::RepeatedRoots, "θ = π gives repeated quadratic factors");
    }
    Decomposition d{spec, {}};
    d.spec.theta = is.theta;
    const double cz = std::cos(spec.zeta);
    const double scale = 2.0 / (is.n * std::sin(is.theta));
    const auto omegas = roots_omega(is.n, is.theta);
    d.terms.reserve(omegas.size());
    for (int k = 0; k < is.n; ++k) {
        const double w = omegas[static_cast<std::size_t>(k)];
        d.terms.push_back({w, scale * std::sin(w) * (cos_p_omega(is.n, is.p, is.theta, k) - cz)});
    }
    return d;
}

double reconstruct(const Decomposition& d, double x) {
    double total = 0.0;
    for (const auto& term : d.terms) {
        total += term.coeff / quadratic_factor(x, term.omega);
    }
    return total;
}

double rational_integrand(const IntegrandSpec& spec, double x) {
    const double n = spec.n;
    const double p = spec.p.real();
    const double lx = std::log(x);
    const double xn = std::exp(n * lx);
    const double em1 = std::expm1(n * lx);
    const double s = std::sin(0.5 * spec.theta);
    const double num = std::exp((n + p) * lx) + std::exp((n - p) * lx) - 2.0 * xn * std::cos(spec.zeta);
    return num / (x * (em1 * em1 + 4.0 * xn * s * s));
}

double antiderivative_term(double omega, double x) {
    if (!(omega > 0.0 && omega < two_pi)) {
        throw Error(ErrorKind::BranchError, "ω must lie in (0, 2π) for a continuous branch");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::DomainError, "x must lie in [0, 1]");
    }
    return std::atan2(x * std::sin(omega), 1.0 - x * std::cos(omega));
}

double integral_at(const IntegrandSpec& spec, double x_upper) {
    if (!(x_upper >= 0.0 && x_upper <= 1.0)) {
        throw Error(ErrorKind::DomainError, "X must lie in [0, 1]");
    }
    const Decomposition d = decompose(spec);
    const int n = static_cast<int>(spec.n);
    const int p = static_cast<int>(spec.p.real());
    const double cz = std::cos(spec.zeta);
    const double scale = 2.0 / (n * std::sin(d.spec.theta));
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = d.terms[static_cast<std::size_t>(k)].omega;
        total += scale * (cos_p_omega(n, p, d.spec.theta, k) - cz) * antiderivative_term(w, x_upper);
    }
    return total;
}

double integral_closed(const IntegrandSpec& spec) {
    const IntegerSpec is = require_integer(spec);
    if (spec.upper.kind == UpperLimit::Kind::Finite) {
        throw Error(ErrorKind::DomainError, "closed assembly covers the upper limits 1 and ∞");
    }
    const double cz = std::cos(spec.zeta);
    const double a = pi - is.theta;
    double value = 0.0;
    if (std::abs(a) < eps_lim) {
        const double q_over_a = is.p == 0 ? 1.0
                                          : sinc(static_cast<double>(is.p) * a / is.n) /
                                                sinc(pi * static_cast<double>(is.p) / is.n);
        value = (q_over_a - cz) / (is.n * sinc(a));
    } else {
        const double q = sum_Q(is.n, static_cast<double>(is.p), is.theta);
        const double r = sum_R(is.n, is.theta);
        value = (q - r * cz) / (is.n * std::sin(is.theta));
    }
    return spec.upper.kind == UpperLimit::Kind::Infinity ? 2.0 * value : value;
}

double p_zero_reduction(double n, double theta) {
    if (!(n > 0.0)) {
        throw Error(ErrorKind::DomainError, "n must be positive");
    }
    const double t = canonicalize_theta(theta).theta;
    return 1.0 / (2.0 * n * sinc(pi - t));
}

ReductionSides vii_reduction_identity(double n, double p, double x_upper) {
    if (!(p > 0.0 && p < n)) {
        throw Error(ErrorKind::DomainError, "need 0 < p < n");
    }
    if (!(x_upper >= 0.0 && x_upper <= 1.0)) {
        throw Error(ErrorKind::DomainError, "X must lie in [0, 1]");
    }
    if (x_upper == 0.0) {
        return {0.0, 0.0};
    }
    const double lhs = quad_theta_pi_kernel(n, p, x_upper).value;
    const double lx = std::log(x_upper);
    const double boundary = (std::exp((n - p) * lx) - std::exp(p * lx)) / (n * (1.0 + std::exp(n * lx)));
    const double rhs = boundary + (p / n) * quad_reduced_theta_pi_kernel(n, p, x_upper).value;
    return {lhs, rhs};
}

}  // namespace kernint
