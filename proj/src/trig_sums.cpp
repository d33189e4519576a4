#include "kernint/trig_sums.hpp"

#include <cmath>

#include "kernint/errors.hpp"
#include "kernint/scalar.hpp"

namespace kernint {

namespace {

// β shifted by a multiple of π into [−π/2, π/2]. t, u and V are unchanged by
// the shift; v changes sign when the multiple is odd.
struct ReducedBeta {
    double beta;
    double sin_beta;
    double v_sign;
};

ReducedBeta reduce_beta(const TrigSumSpec& spec) {
    if (spec.count < 1) {
        throw Error(ErrorKind::DomainError, "count must be >= 1");
    }
    constexpr double pi_lo = 1.2246467991473532e-16;  // π − double(π)
    const double k = std::nearbyint(spec.beta / pi);
    const double b = std::fma(-k, pi_lo, std::fma(-k, pi, spec.beta));
    const double s = std::sin(b);
    if (std::abs(s) <= eps_den) {
        throw Error(ErrorKind::DegenerateBeta, "sin(beta) vanishes");
    }
    const bool odd = std::fmod(std::abs(k), 2.0) == 1.0;
    return {b, s, odd ? -1.0 : 1.0};
}

// Σ_{k} k sin 2kβ over the n offsets k = j − (n+1)/2, j = 1..n.
// The numerator is O(β³) for small β, so it is formed in extended precision.
double centred_sine_moment(int n, double b, double sb) {
    const long double bl = b;
    const long double nb = n * bl;
    const long double num = std::sin(nb) * std::cos(bl) - n * std::cos(nb) * std::sin(bl);
    return static_cast<double>(num / (2.0L * sb * sb));
}

}  // namespace

double cosine_sum_t(const TrigSumSpec& spec) {
    const auto r = reduce_beta(spec);
    const int n = spec.count;
    return std::cos(spec.alpha + (n + 1) * r.beta) * std::sin(n * r.beta) / r.sin_beta;
}

double weighted_cosine_sum_u(const TrigSumSpec& spec) {
    const auto r = reduce_beta(spec);
    const int n = spec.count;
    const double centre = spec.alpha + (n + 1) * r.beta;
    const double t = std::cos(centre) * std::sin(n * r.beta) / r.sin_beta;
    return 0.5 * (n + 1) * t - std::sin(centre) * centred_sine_moment(n, r.beta, r.sin_beta);
}

double sine_sum_v(const TrigSumSpec& spec) {
    const auto r = reduce_beta(spec);
    const int n = spec.count;
    return r.v_sign * std::sin(spec.alpha + n * r.beta) * std::sin(n * r.beta) / r.sin_beta;
}

double arithmetic_cosine_sum_V(const TrigSumSpec& spec) {
    const auto r = reduce_beta(spec);
    const int n = spec.count;
    const double centre = spec.alpha + (n + 1) * r.beta;
    const double t = std::cos(centre) * std::sin(n * r.beta) / r.sin_beta;
    const double u = 0.5 * (n + 1) * t - std::sin(centre) * centred_sine_moment(n, r.beta, r.sin_beta);
    return spec.coeff_a * t + spec.coeff_b * u;
}

double sum_Q(int n, double p, double theta) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "n must be >= 1");
    }
    // π sin(p(π−θ)/n)/sin(pπ/n) = (π−θ) sinc(p(π−θ)/n)/sinc(pπ/n)
    const double a = pi - theta;
    const double beta = pi * p / n;
    const double den = sinc(beta);
    if (std::abs(den * beta) <= eps_den && std::abs(beta) > 0.5) {
        throw Error(ErrorKind::DegenerateBeta, "sin(p pi / n) vanishes");
    }
    return a * sinc(p * a / n) / den;
}

double sum_R(int n, double theta) {
    if (n < 1) {
        throw Error(ErrorKind::DomainError, "n must be >= 1");
    }
    return pi - theta;
}

namespace detail {

double sum_Q_via_progression(int n, double p, double theta) {
    TrigSumSpec spec;
    spec.count = n;
    spec.coeff_a = ((n + 2) * pi - theta) / n;
    spec.coeff_b = -two_pi / n;
    spec.beta = pi * p / n;
    spec.alpha = -p * (two_pi - theta) / n;
    return arithmetic_cosine_sum_V(spec);
}

}  // namespace detail

}  // namespace kernint
