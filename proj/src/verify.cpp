#include "kernint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kernint/closed_form.hpp"
#include "kernint/errors.hpp"
#include "kernint/partial_fractions.hpp"
#include "kernint/quadrature.hpp"
#include "kernint/series.hpp"

namespace kernint {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Agree:
            return "Agree";
        case Verdict::Disagree:
            return "Disagree";
        case Verdict::Skipped:
            return "Skipped";
    }
    return "?";
}

std::string to_string(ParadoxKind kind) {
    return kind == ParadoxKind::Periodicity ? "Periodicity" : "ImaginaryN";
}

namespace {

template <class F>
std::optional<double> attempt(F&& f) {
    try {
        return f();
    } catch (const Error&) {
        return std::nullopt;
    }
}

double upper_factor(const UpperLimit& upper) {
    return upper.kind == UpperLimit::Kind::Infinity ? 2.0 : 1.0;
}

bool closed_upper(const UpperLimit& upper) {
    return upper.kind != UpperLimit::Kind::Finite;
}

// Distance from θ = π below which the partial-fraction sum loses too many digits.
constexpr double pf_theta_margin = 1e-6;

}  // namespace

EvalReport verify_point(const IntegrandSpec& spec, double tol, ThetaPolicy policy) {
    EvalReport report;
    report.spec = spec;
    report.normalized = normalize(spec);
    report.domain = classify_domain(spec, policy);

    const auto kind = report.domain.kind;
    if (kind == DomainKind::Excluded || kind == DomainKind::SingularTheta) {
        report.verdict = Verdict::Skipped;
        report.reason = report.domain.detail;
        return report;
    }
    const bool real_p = spec.p.imag() == 0.0;
    const bool imag_p = spec.p.real() == 0.0;
    if (!real_p && !imag_p) {
        report.verdict = Verdict::Skipped;
        report.reason = "Skipped: p with nonzero real and imaginary parts has no real integrand";
        return report;
    }

    const double theta_c = canonicalize_theta(spec.theta).theta;
    const double factor = upper_factor(spec.upper);

    if (closed_upper(spec.upper)) {
        report.closed = attempt([&] {
            const double theta = policy == ThetaPolicy::AsGiven ? spec.theta : theta_c;
            const complex a(pi - theta, 0.0);
            const complex b = spec.p / spec.n;
            const double c = pi - spec.zeta;
            const auto v = kind == DomainKind::ParadoxOnly ? formula_S(a, b, c) : eval_S(a, b, c);
            return factor * v.value.real() / spec.n;
        });
    }

    IntegrandSpec canon = spec;
    canon.theta = theta_c;
    if (has_integer_exponents(spec) && std::abs(pi - theta_c) > pf_theta_margin) {
        if (spec.upper.kind == UpperLimit::Kind::Finite) {
            if (spec.upper.x <= 1.0) {
                report.pf = attempt([&] { return integral_at(canon, spec.upper.x); });
            }
        } else {
            report.pf = attempt([&] { return factor * integral_at(canon, 1.0); });
        }
    }

    report.quad = attempt([&] { return quad_x_domain(spec).value; });

    if (closed_upper(spec.upper)) {
        report.series = attempt([&] {
            const double stol = std::max(series_tol_floor, 0.1 * tol);
            const double even = real_p ? series_contracted(spec.n, spec.p.real(), theta_c, stol).value
                                       : series_imaginary(spec.n, spec.p.imag(), theta_c, stol).value;
            const double plain = series_one_sided(spec.n, 0.0, theta_c, stol).value;
            return factor * (even - 2.0 * std::cos(spec.zeta) * plain);
        });
    }

    std::vector<double> values;
    for (const auto& v : {report.closed, report.pf, report.quad, report.series}) {
        if (v) {
            values.push_back(*v);
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            worst = std::max(worst, std::abs(values[i] - values[j]));
        }
    }
    report.max_abs_err = worst;
    if (values.size() < 2) {
        report.verdict = Verdict::Disagree;
        report.reason = "fewer than two evaluation paths available";
    } else {
        report.verdict = worst <= tol ? Verdict::Agree : Verdict::Disagree;
    }
    return report;
}

ParadoxReport paradox_periodicity(const IntegrandSpec& spec, int k, double tol) {
    ParadoxReport report;
    report.kind = ParadoxKind::Periodicity;
    report.shift = k;
    const double theta_c = canonicalize_theta(spec.theta).theta;
    const double shifted = theta_c + two_pi * k;
    const complex b = spec.p / spec.n;
    const double c = pi - spec.zeta;
    const double factor = upper_factor(spec.upper);
    UpperLimit upper = closed_upper(spec.upper) ? spec.upper : UpperLimit::one();

    report.formula_value = factor * formula_S(complex(pi - shifted, 0.0), b, c).value / spec.n;
    IntegrandSpec oracle_spec = spec;
    oracle_spec.theta = shifted;
    const double oracle = quad_x_domain(oracle_spec, upper).value;
    report.oracle_value = oracle;
    report.mismatch = std::abs(report.formula_value - oracle);

    const double restored = factor * eval_S(complex(pi - theta_c, 0.0), b, c).value.real() / spec.n;
    report.restored_mismatch = std::abs(restored - oracle);
    report.manifested = *report.mismatch > 0.05 && *report.restored_mismatch < tol;
    report.explanation =
        "The integrand depends on θ only through cos θ, while the closed form is not 2π-periodic in θ; "
        "it equals the integral only for θ in (0, 2π). Shifting θ by 2πk changes the formula but not "
        "the integral, and reducing θ back into (0, 2π) restores agreement.";
    return report;
}

ParadoxReport paradox_imaginary_n(double m, double p, double theta) {
    if (!(m > 0.0)) {
        throw Error(ErrorKind::DomainError, "m must be positive");
    }
    ParadoxReport report;
    report.kind = ParadoxKind::ImaginaryN;
    const double theta_c = canonicalize_theta(theta).theta;
    const double a = pi - theta_c;
    const complex n(0.0, m);
    const complex b = complex(p, 0.0) / n;
    report.formula_value = formula_S(complex(a, 0.0), b, pi / 2).value / n;

    // With xⁿ = e^{−t} and n = mi, the denominator cosh t + cos a turns into
    // cos τ + cos a along the real path τ = m·(−log x); it vanishes at τ = π − |a|.
    const double t_star = pi - std::abs(a);
    report.pole_t = t_star;
    report.pole_x = std::exp(-t_star / m);

    report.control_value = attempt([&] { return eval_S(complex(a, 0.0), complex(p / m, 0.0), pi / 2).value.real() / m; });
    report.control_quad = attempt([&] {
        IntegrandSpec control{m, complex(p, 0.0), theta_c, pi / 2, UpperLimit::one()};
        return quad_x_domain(control).value;
    });

    report.manifested = std::abs(report.formula_value.imag()) > 0.01 && t_star > 0.0;
    report.explanation =
        "For n = mi the closed form returns a purely imaginary number, although the integrand is real. "
        "The kernel denominator vanishes on the integration path, so the integral does not exist and "
        "the formula has no integral to describe. The control row evaluates the same data with real n = m.";
    return report;
}

}  // namespace kernint
