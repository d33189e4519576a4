#include "kernint/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace kernint {

namespace detail {

namespace {

GaussLegendreRule build_gauss_legendre() {
    constexpr int n = GaussLegendreRule::order;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    const Eigen::VectorXd& values = solver.eigenvalues();

    GaussLegendreRule rule{};
    for (int i = 0; i < n; ++i) {
        double x = values(i);
        double dp = 1.0;
        // Newton polish on P_n using the three-term recurrence
        for (int iter = 0; iter < 3; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            x -= p1 / dp;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // enforce exact symmetry
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre() {
    static const GaussLegendreRule rule = build_gauss_legendre();
    return rule;
}

}  // namespace detail

namespace {

// (1 − y)² + 4y sin²(θ/2) = y² − 2y cos θ + 1, with y = xⁿ ≤ 1 and lx_n = n·log x.
double stable_den(double lx_n, double sin_half_sq) {
    const double em1 = std::expm1(lx_n);
    return em1 * em1 + 4.0 * std::exp(lx_n) * sin_half_sq;
}

void require_positive_n(double n) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorKind::DomainError, "n must be positive");
    }
}

double sin_half_sq_of(double theta) {
    const double s = std::sin(0.5 * theta);
    const double v = s * s;
    if (v == 0.0) {
        throw Error(ErrorKind::NonIntegrable, "cos θ = 1 puts a double pole at x = 1");
    }
    return v;
}

}  // namespace

QuadResult<double> quad_x_domain(const IntegrandSpec& spec, const UpperLimit& upper, const QuadOptions& opts) {
    const double n = spec.n;
    require_positive_n(n);
    const double shs = sin_half_sq_of(spec.theta);
    const double cz = std::cos(spec.zeta);
    const double pr = spec.p.real();
    const double pi_ = spec.p.imag();
    if (pr != 0.0 && pi_ != 0.0) {
        throw Error(ErrorKind::DomainError, "p must be real or purely imaginary for a real integrand");
    }
    const double rate = n - std::abs(pr);
    if (!(rate > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "|Re p| >= n");
    }
    if (pi_ == 0.0) {
        auto kernel = [=](double lx) {
            const double l = lx <= 0.0 ? lx : -lx;  // x > 1 in terms of 1/x
            const double m = lx <= 0.0 ? pr : -pr;
            const double xn = std::exp(n * l);
            const double num = std::exp((n + m) * l) + std::exp((n - m) * l) - 2.0 * xn * cz;
            return num / stable_den(n * l, shs);
        };
        return detail::integrate_dx_over_x<double>(kernel, n, upper, rate, rate, opts);
    }
    auto kernel = [=](double lx) {
        const double l = lx <= 0.0 ? lx : -lx;
        const double xn = std::exp(n * l);
        return 2.0 * xn * (std::cos(pi_ * lx) - cz) / stable_den(n * l, shs);
    };
    return detail::integrate_dx_over_x<double>(kernel, n, upper, rate, rate, opts);
}

QuadResult<double> quad_x_domain(const IntegrandSpec& spec, const QuadOptions& opts) {
    return quad_x_domain(spec, spec.upper, opts);
}

QuadResult<double> quad_cos_log(const IntegrandSpec& spec, const UpperLimit& upper, const QuadOptions& opts) {
    const double n = spec.n;
    require_positive_n(n);
    const double shs = sin_half_sq_of(spec.theta);
    const double q = spec.p.imag();
    auto kernel = [=](double lx) {
        const double l = lx <= 0.0 ? lx : -lx;
        return std::exp(n * l) * std::cos(q * lx) / stable_den(n * l, shs);
    };
    return detail::integrate_dx_over_x<double>(kernel, n, upper, n, n, opts);
}

QuadResult<double> quad_one_sided_kernel(double n, double p, double theta, const UpperLimit& upper,
                                         const QuadOptions& opts) {
    require_positive_n(n);
    const double shs = sin_half_sq_of(theta);
    const double rate_zero = n + p;
    const double rate_inf = n - p;
    if (!(rate_zero > 0.0) || (upper.kind == UpperLimit::Kind::Infinity && !(rate_inf > 0.0))) {
        throw Error(ErrorKind::NonIntegrable, "one-sided kernel diverges for this p");
    }
    auto kernel = [=](double lx) {
        if (lx <= 0.0) {
            return std::exp((n + p) * lx) / stable_den(n * lx, shs);
        }
        return std::exp((p - n) * lx) / stable_den(-n * lx, shs);
    };
    return detail::integrate_dx_over_x<double>(kernel, n, upper, rate_zero, std::max(rate_inf, 1e-3), opts);
}

QuadResult<double> quad_theta_pi_kernel(double n, double p, double x_upper, const QuadOptions& opts) {
    require_positive_n(n);
    const double rate = n - std::abs(p);
    if (!(rate > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "|p| >= n");
    }
    auto kernel = [=](double lx) {
        const double l = lx <= 0.0 ? lx : -lx;
        const double m = lx <= 0.0 ? p : -p;
        const double d = 1.0 + std::exp(n * l);
        return (std::exp((n + m) * l) + std::exp((n - m) * l)) / (d * d);
    };
    return detail::integrate_dx_over_x<double>(kernel, n, UpperLimit::finite(x_upper), rate, rate, opts);
}

QuadResult<double> quad_reduced_theta_pi_kernel(double n, double p, double x_upper, const QuadOptions& opts) {
    require_positive_n(n);
    const double rate_zero = std::min(n - p, p);
    if (!(rate_zero > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "need 0 < p < n");
    }
    auto kernel = [=](double lx) {
        if (lx <= 0.0) {
            return (std::exp((n - p) * lx) + std::exp(p * lx)) / (1.0 + std::exp(n * lx));
        }
        return (std::exp(-p * lx) + std::exp((p - n) * lx)) / (1.0 + std::exp(-n * lx));
    };
    return detail::integrate_dx_over_x<double>(kernel, n, UpperLimit::finite(x_upper), rate_zero, rate_zero,
                                                opts);
}

QuadResult<double> quad_tan_kernel(double n, double p, const QuadOptions& opts) {
    require_positive_n(n);
    const double rate = n - std::abs(p);
    if (!(rate > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "|p| >= n");
    }
    auto kernel = [=](double lx) {
        if (lx == 0.0) {
            return p / n;
        }
        return std::exp((n - p) * lx) * std::expm1(2.0 * p * lx) / std::expm1(2.0 * n * lx);
    };
    return detail::integrate_dx_over_x<double>(kernel, n, UpperLimit::one(), rate, rate, opts);
}

QuadResult<double> quad_f_kernel(double f, double b, const QuadOptions& opts) {
    if (!(f > 0.0)) {
        throw Error(ErrorKind::DomainError, "f must be positive");
    }
    const double rate = 1.0 - std::abs(b);
    if (!(rate > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "|b| >= 1");
    }
    const double fs = f + 1.0 / f;
    auto kernel = [=](double lx) {
        const double x = std::exp(lx);
        return (std::exp((1.0 + b) * lx) + std::exp((1.0 - b) * lx)) / (x * x + fs * x + 1.0);
    };
    return detail::integrate_dx_over_x<double>(kernel, 1.0, UpperLimit::one(), rate, rate, opts);
}

QuadResult<double> quad_f_cos_kernel(double f, double q, const QuadOptions& opts) {
    if (!(f > 0.0)) {
        throw Error(ErrorKind::DomainError, "f must be positive");
    }
    const double fs = f + 1.0 / f;
    auto kernel = [=](double lx) {
        const double x = std::exp(lx);
        return x * std::cos(q * lx) / (x * x + fs * x + 1.0);
    };
    return detail::integrate_dx_over_x<double>(kernel, 1.0, UpperLimit::one(), 1.0, 1.0, opts);
}

template <Scalar T>
QuadResult<T> quad_t_domain(const T& a, const T& b, double c, const QuadOptions& opts) {
    if (!(std::abs(real_part(a)) < pi) || !(std::abs(real_part(b)) < 1.0)) {
        throw Error(ErrorKind::NonIntegrable, "need |Re a| < π and |Re b| < 1");
    }
    const T ch = std::cos(a / T(2.0));
    const T ch_sq4 = T(4.0) * ch * ch;
    const double two_cc = 2.0 * std::cos(c);
    auto kernel = [=](double t) -> T {
        const double e = std::exp(-t);
        const double em1 = std::expm1(-t);
        const T num = std::exp((b - T(1.0)) * t) + std::exp(-(b + T(1.0)) * t) + T(two_cc * e);
        const T den = T(em1 * em1) + T(e) * ch_sq4;
        return num / den;
    };
    detail::Budget budget{opts.max_evaluations};
    auto r = detail::integrate_half_line<T>(kernel, 0.0, 1.0 - std::abs(real_part(b)), opts, budget);
    r.evaluations = budget.used;
    return r;
}

template QuadResult<double> quad_t_domain<double>(const double&, const double&, double, const QuadOptions&);
template QuadResult<complex> quad_t_domain<complex>(const complex&, const complex&, double, const QuadOptions&);

namespace {

// 1/(cosh t + cos a) = 2e^{−t}/den for t ≥ 0
double cosh_den(double t, double cos_half_sq4) {
    const double em1 = std::expm1(-t);
    return em1 * em1 + std::exp(-t) * cos_half_sq4;
}

}  // namespace

QuadResult<double> quad_two_sided(double a, double b, int sign, const QuadOptions& opts) {
    if (!(std::abs(a) < pi) || !(std::abs(b) < 1.0)) {
        throw Error(ErrorKind::NonIntegrable, "need |a| < π and |b| < 1");
    }
    const double beta = sign >= 0 ? b : -b;
    const double ch = std::cos(0.5 * a);
    const double ch4 = 4.0 * ch * ch;
    detail::Budget budget{opts.max_evaluations};
    auto right = [=](double t) { return 2.0 * std::exp((beta - 1.0) * t) / cosh_den(t, ch4); };
    auto left = [=](double t) { return 2.0 * std::exp((-beta - 1.0) * t) / cosh_den(t, ch4); };
    const auto r1 = detail::integrate_half_line<double>(right, 0.0, 1.0 - beta, opts, budget);
    const auto r2 = detail::integrate_half_line<double>(left, 0.0, 1.0 + beta, opts, budget);
    return {r1.value + r2.value, r1.abs_err_estimate + r2.abs_err_estimate, budget.used};
}

QuadResult<double> quad_cosine_transform(double a, double q, const QuadOptions& opts) {
    if (!(std::abs(a) < pi)) {
        throw Error(ErrorKind::NonIntegrable, "need |a| < π");
    }
    const double ch = std::cos(0.5 * a);
    const double ch4 = 4.0 * ch * ch;
    auto kernel = [=](double t) { return 2.0 * std::exp(-t) * std::cos(q * t) / cosh_den(t, ch4); };
    detail::Budget budget{opts.max_evaluations};
    auto r = detail::integrate_half_line<double>(kernel, 0.0, 1.0, opts, budget);
    r.evaluations = budget.used;
    return r;
}

QuadResult<double> quad_sech2_transform(double q, const QuadOptions& opts) {
    auto kernel = [=](double t) {
        const double e2 = std::exp(-2.0 * t);
        const double d = 1.0 + e2;
        return 4.0 * e2 * std::cos(2.0 * q * t) / (d * d);
    };
    detail::Budget budget{opts.max_evaluations};
    auto r = detail::integrate_half_line<double>(kernel, 0.0, 2.0, opts, budget);
    r.evaluations = budget.used;
    return r;
}

SecAntiderivativeCheck quad_sec_antiderivative_check(double m, double z_upper) {
    const double mz = m * z_upper;
    if (!(std::abs(mz) < 0.5 * pi - 1e-3)) {
        throw Error(ErrorKind::PoleTooClose, "|mZ| must stay below π/2 − 1e-3");
    }
    auto f = [=](double z) { return m / std::cos(m * z); };
    const auto r = detail::integrate_finite<double>(f, 0.0, z_upper, QuadOptions{});
    return {r.value, -std::log(std::tan(0.25 * pi - 0.5 * mz))};
}

}  // namespace kernint
