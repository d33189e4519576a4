#include "kernint/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "kernint/errors.hpp"
#include "kernint/params.hpp"
#include "kernint/scalar.hpp"

namespace kernint {

namespace {

// Neumaier's compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// ζ(2k), k = 1..30
constexpr std::array<double, 30> zeta_even{
    1.6449340668482264365, 1.0823232337111381915, 1.0173430619844491397,
    1.0040773561979443394, 1.0009945751278180853, 1.0002460865533080483,
    1.0000612481350587048, 1.0000152822594086519, 1.0000038172932649998,
    1.0000009539620338728, 1.0000002384505027277, 1.0000000596081890513,
    1.0000000149015548284, 1.0000000037253340248, 1.0000000009313274324,
    1.0000000002328311834, 1.0000000000582077209, 1.0000000000145519219,
    1.0000000000036379795, 1.0000000000009094948, 1.0000000000002273737,
    1.0000000000000568434, 1.0000000000000142109, 1.0000000000000035527,
    1.0000000000000008882, 1.000000000000000222, 1.0000000000000000555,
    1.0000000000000000139, 1.0000000000000000035, 1.0000000000000000009,
};

// Cl₂(x) = Σ sin kx/k² for |x| ≤ π, from its Bernoulli-number expansion.
double clausen2(double x) {
    if (x == 0.0) {
        return 0.0;
    }
    const double r2 = (x / two_pi) * (x / two_pi);
    double power = 1.0;
    double s = 0.0;
    for (std::size_t k = 1; k <= zeta_even.size(); ++k) {
        power *= r2;
        s += zeta_even[k - 1] * power / (static_cast<double>(k) * (2.0 * k + 1.0));
    }
    return x * (1.0 - std::log(std::abs(x)) + s);
}

// Σ sin kθ/k² / sin θ on (0, 2π). Near θ = π, with θ = π + x,
// Cl₂(π + x) = Cl₂(2x)/2 − Cl₂(x) = x (Σ_k (4^k − 1) ζ(2k) (x/2π)^{2k}/(k(2k+1)) − log 2).
double clausen_anchor(double theta) {
    const double x = theta - pi;
    if (std::abs(x) < 1.0) {
        const double r2 = (x / two_pi) * (x / two_pi);
        double power = 1.0;
        double four_k = 1.0;
        double s = 0.0;
        for (std::size_t k = 1; k <= zeta_even.size(); ++k) {
            power *= r2;
            four_k *= 4.0;
            s += (four_k - 1.0) * zeta_even[k - 1] * power / (static_cast<double>(k) * (2.0 * k + 1.0));
        }
        return (std::log(2.0) - s) / sinc(x);
    }
    return clausen2(theta <= pi ? theta : theta - two_pi) / std::sin(theta);
}

// Σ sin kθ/k / sin θ = (π − θ)/(2 sin θ)
double sawtooth_anchor(double theta) {
    return 0.5 / sinc(pi - theta);
}

// Σ sin kθ/k³ / sin θ; the sum is a(π² − a²)/12 with a = π − θ.
double cubic_anchor(double theta) {
    const double a = pi - theta;
    return (pi * pi - a * a) / (12.0 * sinc(a));
}

struct Remainder {
    double value;
    std::size_t terms;
    double tail;
};

// Σ_{k≥1} (sin kθ/sin θ) g(k) for g positive, decreasing, with
// x^order g(x) monotone. Stops once weight·bound(tail) ≤ tol.
//
// With B_N = Σ_{k≤N} sin kθ/sin θ, summation by parts gives
// |tail after K| ≤ |B_K| g(K+1) + Σ_{k>K} |B_k| (g(k) − g(k+1)), and
// |B_N| ≤ min(1/(2 s² |c|), (N+1)/(2 s²)) with s = sin(θ/2), c = cos(θ/2).
Remainder sum_remainder(double theta, const std::function<double(double)>& g, double order, double weight,
                        double tol) {
    const double a = pi - theta;
    const double s = std::sin(0.5 * theta);
    const double c = std::abs(std::sin(0.5 * a));
    const double s2 = s * s;
    const double flat = c > 0.0 ? 1.0 / (2.0 * s2 * c) : INFINITY;
    const double slope = 1.0 / (2.0 * s2);
    const double sa = sinc(a);

    auto tail_bound = [&](std::size_t k) {
        const double m = static_cast<double>(k + 1);
        const double gm = g(m);
        const double integral = std::max(std::pow(m, order) * gm, 1.0) * std::pow(m, 1.0 - order) / (order - 1.0);
        const double linear = slope * ((2.0 * m + 1.0) * gm + integral);
        return weight * std::min(2.0 * flat * gm, linear);
    };

    CompensatedSum acc;
    for (std::size_t k = 1; k <= series_max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        const double sk = sign * kd * sinc(kd * a) / sa;  // sin kθ / sin θ
        acc.add(sk * g(kd));
        const double bound = tail_bound(k);
        if (bound <= tol) {
            return {acc.value(), k, bound};
        }
    }
    throw Error(ErrorKind::ToleranceUnreachable, "series tail bound not reached within the term cap");
}

double prepare_theta(double theta, double tol) {
    if (!(tol >= series_tol_floor)) {
        throw Error(ErrorKind::ToleranceUnreachable, "tol is below the series floor of 1e-13");
    }
    const double t = canonicalize_theta(theta).theta;
    if (t < series_theta_margin || t > two_pi - series_theta_margin) {
        throw Error(ErrorKind::SlowConvergence, "θ too close to 0 or 2π for the series");
    }
    return t;
}

void require_strip(double n, double p) {
    if (!(n > 0.0)) {
        throw Error(ErrorKind::DomainError, "n must be positive");
    }
    if (!(std::abs(p) < n)) {
        throw Error(ErrorKind::Excluded, "|p| must be < n");
    }
}

}  // namespace

double recurrent_series_partial(double theta, double x, std::size_t count) {
    if (!(std::abs(x) < 1.0)) {
        throw Error(ErrorKind::DomainError, "|x| must be < 1");
    }
    CompensatedSum acc;
    double xk = 1.0;
    for (std::size_t k = 0; k < count; ++k) {
        acc.add(xk * std::sin(static_cast<double>(k + 1) * theta));
        xk *= x;
    }
    return acc.value();
}

SeriesResult series_one_sided(double n, double p, double theta, double tol) {
    require_strip(n, p);
    const double t = prepare_theta(theta, tol);
    const double b = p / n;
    const double anchor = sawtooth_anchor(t);
    if (b == 0.0) {
        return {anchor / n, 0, 0.0, true};
    }
    // 1/(k + b) = 1/k − b/k² + b²/k³ − b³/(k³(k + b))
    const double b3 = b * b * b;
    const double weight = std::abs(b3) / n;
    const auto r = sum_remainder(
        t, [b](double k) { return 1.0 / (k * k * k * (k + b)); }, 4.0, weight, tol);
    const double head = anchor - b * clausen_anchor(t) + b * b * cubic_anchor(t);
    return {(head - b3 * r.value) / n, r.terms, r.tail, true};
}

SeriesResult series_contracted(double n, double p, double theta, double tol) {
    require_strip(n, p);
    const double t = prepare_theta(theta, tol);
    const double b = p / n;
    const double anchor = 2.0 * sawtooth_anchor(t);
    if (b == 0.0) {
        return {anchor / n, 0, 0.0, true};
    }
    // k/(k² − b²) = 1/k + b²/k³ + b⁴/(k³(k² − b²))
    const double b2 = b * b;
    const double weight = 2.0 * b2 * b2 / n;
    const auto r = sum_remainder(
        t, [b2](double k) { return 1.0 / (k * k * k * (k * k - b2)); }, 5.0, weight, tol);
    return {(anchor + 2.0 * b2 * cubic_anchor(t) + 2.0 * b2 * b2 * r.value) / n, r.terms, r.tail, true};
}

SeriesResult series_imaginary(double n, double q, double theta, double tol) {
    if (!(n > 0.0)) {
        throw Error(ErrorKind::DomainError, "n must be positive");
    }
    const double t = prepare_theta(theta, tol);
    const double beta = q / n;
    const double anchor = 2.0 * sawtooth_anchor(t);
    if (beta == 0.0) {
        return {anchor / n, 0, 0.0, true};
    }
    // k/(k² + β²) = 1/k − β²/k³ + β⁴/(k³(k² + β²))
    const double b2 = beta * beta;
    const double weight = 2.0 * b2 * b2 / n;
    const auto r = sum_remainder(
        t, [b2](double k) { return 1.0 / (k * k * k * (k * k + b2)); }, 5.0, weight, tol);
    return {(anchor - 2.0 * b2 * cubic_anchor(t) + 2.0 * b2 * b2 * r.value) / n, r.terms, r.tail, true};
}

}  // namespace kernint
