#pragma once

// Numerical oracle for every integral the library evaluates in closed form.
//
// Two independent rules are provided: a tanh-sinh (double-exponential) rule
// refined by halving its step, and an adaptive Gauss-Legendre rule refined by
// bisecting panels. Half-line integrals are split into geometrically growing
// panels and truncated at T = ln(10^16/μ)/μ past the lower limit, where μ is
// the exponential decay rate of the integrand.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kernint/errors.hpp"
#include "kernint/params.hpp"
#include "kernint/scalar.hpp"

namespace kernint {

template <Scalar T>
struct QuadResult {
    T value{};
    double abs_err_estimate = 0.0;
    std::size_t evaluations = 0;
};

enum class QuadRule { DoubleExponential, GaussLegendre };

struct QuadOptions {
    QuadRule rule = QuadRule::DoubleExponential;
    double rel_tol = 1e-13;
    std::size_t max_evaluations = 2'000'000;
};

namespace detail {

struct GaussLegendreRule {
    static constexpr int order = 20;
    std::array<double, order> nodes;
    std::array<double, order> weights;
};

/// Nodes and weights on [-1, 1], computed once.
const GaussLegendreRule& gauss_legendre();

struct Budget {
    std::size_t limit;
    std::size_t used = 0;

    void charge(std::size_t n) {
        used += n;
        if (used > limit) {
            throw Error(ErrorKind::BudgetExceeded, "quadrature exceeded its evaluation budget");
        }
    }
};

template <Scalar T>
struct PanelResult {
    T value{};
    double l1 = 0.0;   // estimate of ∫|f|, the scale the tolerance refers to
    double err = 0.0;
};

/// Tanh-sinh on [lo, hi]: halves the step until two successive estimates
/// agree to max(abs_tol, rel_tol·∫|f|).
template <Scalar T, class F>
PanelResult<T> tanh_sinh(F&& f, double lo, double hi, double rel_tol, double abs_tol, Budget& budget) {
    constexpr double t_max = 3.5;
    constexpr int min_level = 3;
    constexpr int max_level = 14;
    const double half = 0.5 * (hi - lo);

    auto node_sum = [&](double t, double h, T& acc, double& acc_abs) {
        const double u = 0.5 * pi * std::sinh(t);
        const double cu = std::cosh(u);
        const double w = half * 0.5 * pi * std::cosh(t) / (cu * cu);
        // distance to the nearer endpoint, computed without cancellation
        const double delta = 2.0 * half / (std::exp(2.0 * std::abs(u)) + 1.0);
        const double x = t < 0.0 ? lo + delta : hi - delta;
        const T fx = f(x);
        acc += T(h * w) * fx;
        acc_abs += h * w * std::abs(fx);
    };

    T estimate{};
    double l1 = 0.0;
    {
        T acc{};
        double acc_abs = 0.0;
        const int n0 = static_cast<int>(t_max);
        for (int j = -n0; j <= n0; ++j) {
            node_sum(static_cast<double>(j), 1.0, acc, acc_abs);
        }
        budget.charge(2 * n0 + 1);
        estimate = acc;
        l1 = acc_abs;
    }
    double h = 1.0;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        T acc{};
        double acc_abs = 0.0;
        const int jmax = static_cast<int>(t_max / h);
        std::size_t count = 0;
        for (int j = -jmax + ((jmax % 2 == 0) ? 1 : 0); j <= jmax; j += 2) {
            node_sum(j * h, h, acc, acc_abs);
            ++count;
        }
        budget.charge(count);
        const T next = T(0.5) * estimate + acc;
        l1 = 0.5 * l1 + acc_abs;
        const double diff = std::abs(next - estimate);
        estimate = next;
        if (level >= min_level && diff <= std::max(abs_tol, rel_tol * l1)) {
            return {estimate, l1, diff};
        }
    }
    throw Error(ErrorKind::BudgetExceeded, "tanh-sinh did not converge at the finest level");
}

/// Adaptive Gauss-Legendre: a panel is accepted once its value and the sum
/// over its two halves agree to the panel's share of the tolerance.
template <Scalar T, class F>
PanelResult<T> gauss_adaptive(F&& f, double lo, double hi, double rel_tol, double abs_tol, Budget& budget) {
    const auto& rule = gauss_legendre();
    auto panel = [&](double a, double b, double& abs_out) {
        const double c = 0.5 * (a + b);
        const double r = 0.5 * (b - a);
        T acc{};
        double acc_abs = 0.0;
        for (int i = 0; i < GaussLegendreRule::order; ++i) {
            const T fx = f(c + r * rule.nodes[i]);
            acc += T(rule.weights[i]) * fx;
            acc_abs += rule.weights[i] * std::abs(fx);
        }
        budget.charge(GaussLegendreRule::order);
        abs_out = r * acc_abs;
        return T(r) * acc;
    };

    // The initial scale comes from 16 uniform panels.
    constexpr int initial = 16;
    struct Item {
        double a, b;
        T whole;
        int depth;
    };
    std::vector<Item> stack;
    double scale = 0.0;
    const double width = (hi - lo) / initial;
    for (int i = initial - 1; i >= 0; --i) {
        const double a = lo + i * width;
        const double b = (i == initial - 1) ? hi : lo + (i + 1) * width;
        double l1 = 0.0;
        const T v = panel(a, b, l1);
        scale += l1;
        stack.push_back({a, b, v, 0});
    }
    const double total_len = hi - lo;

    T result{};
    double l1_total = 0.0;
    double err_total = 0.0;
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (item.a + item.b);
        double l1_left = 0.0;
        double l1_right = 0.0;
        const T left = panel(item.a, mid, l1_left);
        const T right = panel(mid, item.b, l1_right);
        const T refined = left + right;
        const double diff = std::abs(refined - item.whole);
        const double share = (item.b - item.a) / total_len;
        const double tol = std::max(abs_tol, rel_tol * std::max(scale, l1_total)) * share;
        if (diff <= tol || item.depth >= 40) {
            if (item.depth >= 40 && diff > tol) {
                throw Error(ErrorKind::BudgetExceeded, "Gauss-Legendre bisection depth exhausted");
            }
            result += refined;
            l1_total += l1_left + l1_right;
            err_total += diff;
        } else {
            stack.push_back({mid, item.b, right, item.depth + 1});
            stack.push_back({item.a, mid, left, item.depth + 1});
        }
    }
    return {result, l1_total, err_total};
}

template <Scalar T, class F>
PanelResult<T> integrate_panel(F&& f, double lo, double hi, const QuadOptions& opts, double abs_tol,
                               Budget& budget) {
    if (opts.rule == QuadRule::GaussLegendre) {
        return gauss_adaptive<T>(f, lo, hi, opts.rel_tol, abs_tol, budget);
    }
    return tanh_sinh<T>(f, lo, hi, opts.rel_tol, abs_tol, budget);
}

/// Truncation length past the lower limit for decay rate mu.
inline double truncation_length(double mu) {
    return std::log(1e16 / mu) / mu;
}

/// ∫_lo^∞ f(s) ds for |f(s)| ≲ C e^{−μ s}. Panels [lo, lo+1], [lo+1, lo+3],
/// [lo+3, lo+7], ... up to the truncation point.
template <Scalar T, class F>
QuadResult<T> integrate_half_line(F&& f, double lo, double mu, const QuadOptions& opts, Budget& budget) {
    if (!(mu > 0.0)) {
        throw Error(ErrorKind::NonIntegrable, "integrand does not decay");
    }
    const double end = lo + truncation_length(mu);
    T total{};
    double l1 = 0.0;
    double err = 0.0;
    const std::size_t start_used = budget.used;
    double a = lo;
    double width = 1.0;
    while (a < end) {
        const double b = std::min(end, a + width);
        const double abs_tol = 0.1 * opts.rel_tol * l1;
        const auto part = integrate_panel<T>(f, a, b, opts, abs_tol, budget);
        total += part.value;
        l1 += part.l1;
        err += part.err;
        a = b;
        width *= 2.0;
    }
    // e^{−μT} tail relative to the integrand's size at the lower limit
    err += std::abs(f(end)) / mu;
    return {total, err, budget.used - start_used + 1};
}

/// ∫_lo^hi f over a finite interval.
template <Scalar T, class F>
QuadResult<T> integrate_finite(F&& f, double lo, double hi, const QuadOptions& opts) {
    Budget budget{opts.max_evaluations};
    if (lo == hi) {
        return {};
    }
    if (hi < lo) {
        auto r = integrate_finite<T>(f, hi, lo, opts);
        r.value = -r.value;
        return r;
    }
    const auto part = integrate_panel<T>(f, lo, hi, opts, 0.0, budget);
    return {part.value, part.err, budget.used};
}

/// ∫₀^X F(x) dx/x where F is given as a function of log x and |F| ≲ x^{rate_zero}
/// as x → 0 and ≲ x^{−rate_inf} as x → ∞. The substitution x = e^{−s/kappa}
/// removes the endpoint behaviour at x = 0; the integral over x > 1, when the
/// upper limit exceeds 1, is a second half-line.
template <Scalar T, class K>
QuadResult<T> integrate_dx_over_x(K&& kernel_of_log, double kappa, const UpperLimit& upper, double rate_zero,
                                  double rate_inf, const QuadOptions& opts) {
    Budget budget{opts.max_evaluations};
    auto lower_part = [&](double s) { return kernel_of_log(-s / kappa); };
    switch (upper.kind) {
        case UpperLimit::Kind::One: {
            auto r = integrate_half_line<T>(lower_part, 0.0, rate_zero / kappa, opts, budget);
            return {r.value / kappa, r.abs_err_estimate / kappa, budget.used};
        }
        case UpperLimit::Kind::Finite: {
            const double s0 = -kappa * std::log(upper.x);
            if (s0 >= 0.0) {
                auto r = integrate_half_line<T>(lower_part, s0, rate_zero / kappa, opts, budget);
                return {r.value / kappa, r.abs_err_estimate / kappa, budget.used};
            }
            // X > 1: (0, 1] plus [1, X]
            auto r0 = integrate_half_line<T>(lower_part, 0.0, rate_zero / kappa, opts, budget);
            auto upper_part = [&](double s) { return kernel_of_log(s / kappa); };
            const auto r1 = integrate_panel<T>(upper_part, 0.0, -s0, opts, 0.0, budget);
            return {(r0.value + r1.value) / kappa, (r0.abs_err_estimate + r1.err) / kappa, budget.used};
        }
        case UpperLimit::Kind::Infinity: {
            // split at x = 2 so that kernels symmetric under x → 1/x are not
            // sampled at mirrored nodes
            const double split = kappa * std::log(2.0);
            auto r0 = integrate_half_line<T>(lower_part, -split, rate_zero / kappa, opts, budget);
            auto upper_part = [&](double s) { return kernel_of_log(s / kappa); };
            auto r1 = integrate_half_line<T>(upper_part, split, rate_inf / kappa, opts, budget);
            return {(r0.value + r1.value) / kappa, (r0.abs_err_estimate + r1.abs_err_estimate) / kappa,
                    budget.used};
        }
    }
    throw Error(ErrorKind::DomainError, "unknown upper limit");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kernels of the x-domain problem

/// ∫₀^X (x^{n+p} − 2xⁿ cos ζ + x^{n−p})/(x^{2n} − 2xⁿ cos θ + 1) dx/x.
/// p must be real or purely imaginary (the integrand is then real).
QuadResult<double> quad_x_domain(const IntegrandSpec& spec, const UpperLimit& upper,
                                 const QuadOptions& opts = {});

/// Same, with the upper limit taken from spec.upper.
QuadResult<double> quad_x_domain(const IntegrandSpec& spec, const QuadOptions& opts = {});

/// ∫₀^X cos(q log x)/(xⁿ − 2 cos θ + x^{−n}) dx/x with q = Im(spec.p).
QuadResult<double> quad_cos_log(const IntegrandSpec& spec, const UpperLimit& upper,
                                const QuadOptions& opts = {});

/// ∫₀^X x^p/(xⁿ − 2 cos θ + x^{−n}) dx/x, the one-sided kernel.
QuadResult<double> quad_one_sided_kernel(double n, double p, double theta, const UpperLimit& upper,
                                         const QuadOptions& opts = {});

/// ∫₀^X (x^{n+p} + x^{n−p})/(1 + xⁿ)² dx/x, the repeated-root kernel at θ = π.
QuadResult<double> quad_theta_pi_kernel(double n, double p, double x_upper, const QuadOptions& opts = {});

/// ∫₀^X (x^{n−p} + x^p)/(1 + xⁿ) dx/x.
QuadResult<double> quad_reduced_theta_pi_kernel(double n, double p, double x_upper,
                                                const QuadOptions& opts = {});

/// ∫₀¹ (x^p − x^{−p})/(xⁿ − x^{−n}) dx/x.
QuadResult<double> quad_tan_kernel(double n, double p, const QuadOptions& opts = {});

/// ∫₀¹ (x^b + x^{−b})/(x + f + 1/f + 1/x) dx/x.
QuadResult<double> quad_f_kernel(double f, double b, const QuadOptions& opts = {});

/// ∫₀¹ cos(q log x)/(x + f + 1/f + 1/x) dx/x.
QuadResult<double> quad_f_cos_kernel(double f, double q, const QuadOptions& opts = {});

// ---------------------------------------------------------------------------
// Kernels of the normalised (t-domain) problem

/// ∫₀^∞ (cosh bt + cos c)/(cosh t + cos a) dt for |Re a| < π, |Re b| < 1.
template <Scalar T>
QuadResult<T> quad_t_domain(const T& a, const T& b, double c, const QuadOptions& opts = {});

extern template QuadResult<double> quad_t_domain<double>(const double&, const double&, double,
                                                         const QuadOptions&);
extern template QuadResult<complex> quad_t_domain<complex>(const complex&, const complex&, double,
                                                           const QuadOptions&);

/// ∫_{−∞}^{∞} e^{±bt}/(cosh t + cos a) dt, sign selects the exponent.
QuadResult<double> quad_two_sided(double a, double b, int sign = +1, const QuadOptions& opts = {});

/// ∫₀^∞ cos(qt)/(cosh t + cos a) dt.
QuadResult<double> quad_cosine_transform(double a, double q, const QuadOptions& opts = {});

/// ∫₀^∞ cos(2qt)/cosh²t dt.
QuadResult<double> quad_sech2_transform(double q, const QuadOptions& opts = {});

struct SecAntiderivativeCheck {
    double lhs;  // ∫₀^Z m dz / cos(mz) by quadrature
    double rhs;  // −log tan(π/4 − mZ/2)
};

/// Compares the quadrature of the secant with its log-tangent antiderivative.
SecAntiderivativeCheck quad_sec_antiderivative_check(double m, double z_upper);

}  // namespace kernint
