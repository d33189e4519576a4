#pragma once

// Closed-form values of the half-line integral
//
//     S(a, b, c) = ∫₀^∞ (cosh bt + cos c)/(cosh t + cos a) dt
//                = π sin(ab)/(sin a sin πb) + a cos c / sin a,
//
// valid for |Re a| < π, |Re b| < 1, and the named specialisations of it.
// Every specialisation is routed through formula_S so the formulas cannot drift.

#include <cmath>
#include <complex>

#include "kernint/errors.hpp"
#include "kernint/params.hpp"
#include "kernint/scalar.hpp"

namespace kernint {

enum class LimitApplied { None, AZero, BZero, Both };

template <Scalar T>
struct ClosedValue {
    T value;
    LimitApplied limit_applied = LimitApplied::None;
};

/// Threshold on |sin πb| that triggers NearPole close to b = ±1.
inline constexpr double eps_pole = 1e-10;

/// The formula itself, with no strip check. The validity strip is the
/// caller's business; the paradox demonstrators call this on purpose
/// outside of it.
///
/// Written as sinc(ab)/(sinc(a) sinc(πb)) + cos c / sinc(a), which is the
/// same expression with both removable singularities cancelled.
template <Scalar T>
ClosedValue<T> formula_S(const T& a, const T& b, double c) {
    using std::abs;
    const T pb = T(pi) * b;
    const T sa = sinc(a);
    const T value = sinc(a * b) / (sa * sinc(pb)) + T(std::cos(c)) / sa;

    const bool a0 = abs(a) < eps_lim;
    const bool b0 = abs(b) < eps_lim;
    LimitApplied limit = LimitApplied::None;
    if (a0 && b0) {
        limit = LimitApplied::Both;
    } else if (a0) {
        limit = LimitApplied::AZero;
    } else if (b0) {
        limit = LimitApplied::BZero;
    }
    return {value, limit};
}

namespace detail {

template <Scalar T>
void check_strip(const T& a, const T& b) {
    using std::abs;
    using std::sin;
    if (!(std::abs(real_part(a)) < pi)) {
        throw Error(ErrorKind::DomainError, "|Re a| must be < pi");
    }
    if (!(std::abs(real_part(b)) < 1.0)) {
        throw Error(ErrorKind::DomainError, "|Re b| must be < 1");
    }
    if (abs(b) > 0.5 && abs(sin(T(pi) * b)) < eps_pole) {
        throw Error(ErrorKind::NearPole, "sin(pi b) vanishes near b = ±1");
    }
}

}  // namespace detail

template <Scalar T>
ClosedValue<T> eval_S(const T& a, const T& b, double c) {
    detail::check_strip(a, b);
    return formula_S(a, b, c);
}

/// S on a normalised form, i.e. n times the x-domain value for upper limit 1.
inline ClosedValue<complex> eval_S(const NormalizedForm& form) {
    return eval_S(form.a, form.b, form.c);
}

/// P(a, b) = S(a, b, π/2) = π sin(ab)/(sin a sin πb).
template <Scalar T>
ClosedValue<T> eval_P(const T& a, const T& b) {
    return eval_S(a, b, pi / 2);
}

/// (π/2) sec(πb/2): the θ = ζ = π/2 case.
double eval_sec_case(double b);

/// (π/2) tan(πb/2) = n ∫₀¹ (x^p − x^{−p})/(xⁿ − x^{−n}) dx/x with b = p/n.
double eval_tan_case(double b);

/// ∫₀^∞ cos(qt)/(cosh t + cos a) dt = π sinh(aq)/(sin a sinh πq).
double eval_sech_transform(double a, double q);

/// ∫₀^∞ cos(2qt)/cosh²t dt = πq/sinh πq.
double eval_sech2_transform(double q);

/// θ = π limit: πb/sin πb.
template <Scalar T>
ClosedValue<T> eval_theta_pi_limit(const T& b) {
    return eval_P(T(0.0), b);
}

/// π(f^b − f^{−b})/((f − 1/f) sin πb), i.e. P(i log f, b), principal branch.
ClosedValue<complex> eval_f_form(const complex& f, const complex& b);

/// 2π sin(q log f)/((f − 1/f)(e^{πq} − e^{−πq})) = ½ P(i log f, iq).
/// Value of ∫₀¹ cos(q log x)/(x + f + 1/f + 1/x) dx/x.
double eval_f_cos_form(double f, double q);

}  // namespace kernint
