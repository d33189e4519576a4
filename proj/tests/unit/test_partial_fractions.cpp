#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "kernint/errors.hpp"
#include "kernint/partial_fractions.hpp"
#include "kernint/quadrature.hpp"
#include "oracles.hpp"

using namespace kernint;

namespace {

constexpr double ref_antiderivative_25_07 = 0.26222690515538590756;
constexpr double ref_vii_lhs_3_14_08 = 0.38209305849622261424;

IntegrandSpec ispec(int n, int p, double theta, double zeta, UpperLimit upper = UpperLimit::one()) {
    return {static_cast<double>(n), {static_cast<double>(p), 0.0}, theta, zeta, upper};
}

void expect_kind(ErrorKind kind, auto&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(RootsOmega, AreRootsOfTheDenominator) {
    for (int n = 1; n <= 16; ++n) {
        for (double theta : {0.3, 2.0, 4.5}) {
            const auto w = roots_omega(n, theta);
            ASSERT_EQ(w.size(), static_cast<std::size_t>(n));
            for (double omega : w) {
                const std::complex<double> z = std::polar(1.0, omega);
                const auto zn = std::pow(z, n);
                EXPECT_LT(std::abs(zn * zn - 2.0 * zn * std::cos(theta) + 1.0), 1e-12);
            }
            for (std::size_t k = 1; k < w.size(); ++k) {
                EXPECT_LT(w[k - 1], w[k]);
            }
        }
    }
}

TEST(RootsOmega, RejectsThetaOutsideRange) {
    expect_kind(ErrorKind::DomainError, [] { roots_omega(2, 0.0); });
    expect_kind(ErrorKind::DomainError, [] { roots_omega(2, 7.0); });
    expect_kind(ErrorKind::DomainError, [] { roots_omega(0, 1.0); });
}

TEST(Decompose, QuarterTurnExample) {
    const auto d = decompose(ispec(2, 1, pi / 2, pi / 2));
    ASSERT_EQ(d.terms.size(), 2u);
    EXPECT_NEAR(d.terms[0].omega, pi / 4, 1e-15);
    EXPECT_NEAR(d.terms[0].coeff, 0.5, 1e-15);
    EXPECT_NEAR(d.terms[1].omega, 5 * pi / 4, 1e-15);
    EXPECT_NEAR(d.terms[1].coeff, coefficient_P(5 * pi / 4, d.spec), 1e-15);
}

TEST(Decompose, ThreeRootExample) {
    const auto s = ispec(3, 1, 1.0, 1.0);
    const auto d = decompose(s);
    EXPECT_EQ(d.terms.size(), 3u);
    EXPECT_LT(std::abs(reconstruct(d, 0.5) - rational_integrand(s, 0.5)), 1e-12);
}

TEST(Decompose, CoefficientsMatchResidues) {
    // 2i sin ω · P_k equals the residue of the rational function at e^{iω}
    // times the derivative of the quadratic factor.
    for (int n : {2, 5, 9}) {
        for (int p = 0; p < n; ++p) {
            const auto s = ispec(n, p, 1.3, 0.4);
            const auto d = decompose(s);
            for (const auto& term : d.terms) {
                const std::complex<double> z = std::polar(1.0, term.omega);
                const auto zn = std::pow(z, n);
                const auto num = std::pow(z, n + p) - 2.0 * zn * std::cos(s.zeta) + std::pow(z, n - p);
                const auto den_prime = (2.0 * double(n) * zn * zn - 2.0 * double(n) * zn * std::cos(s.theta)) / z;
                const auto residue = num / (z * den_prime);
                const auto from_coeff = term.coeff / (2.0 * z - 2.0 * std::cos(term.omega));
                EXPECT_LT(std::abs(residue - from_coeff), 1e-12) << n << " " << p;
            }
        }
    }
}

TEST(Decompose, ReconstructionRelativeResidual) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    std::uniform_real_distribution<double> ut(0.05, 2 * pi - 0.05);
    std::uniform_real_distribution<double> uz(0.0, pi);
    for (int n = 1; n <= 32; ++n) {
        for (int p = -(n - 1); p < n; ++p) {
            double theta = ut(rng);
            if (std::abs(theta - pi) < 1e-3) {
                theta += 0.01;
            }
            const auto s = ispec(n, p, theta, uz(rng));
            const auto d = decompose(s);
            for (int i = 0; i < 20; ++i) {
                const double x = ux(rng);
                const double f = static_cast<double>(oracle::integrand(n, p, theta, s.zeta, x));
                EXPECT_LT(std::abs(reconstruct(d, x) - f), 1e-12 * std::max(1.0, std::abs(f)))
                    << n << " " << p << " " << theta << " " << x;
            }
        }
    }
}

TEST(Decompose, Errors) {
    expect_kind(ErrorKind::NotIntegerExponents, [] { decompose({2.0, {0.5, 0.0}, 1.0, 1.0, UpperLimit::one()}); });
    expect_kind(ErrorKind::NotIntegerExponents, [] { decompose({2.5, {1.0, 0.0}, 1.0, 1.0, UpperLimit::one()}); });
    expect_kind(ErrorKind::Excluded, [] { decompose(ispec(2, 2, 1.0, 1.0)); });
    expect_kind(ErrorKind::RepeatedRoots, [] { decompose(ispec(2, 1, pi, 1.0)); });
    expect_kind(ErrorKind::RepeatedRoots, [] { decompose(ispec(2, 1, 3 * pi, 1.0)); });
}

TEST(Decompose, CanonicalizesTheta) {
    const auto a = decompose(ispec(3, 2, 1.0, 0.5));
    const auto b = decompose(ispec(3, 2, 1.0 + 2 * two_pi, 0.5));
    ASSERT_EQ(a.terms.size(), b.terms.size());
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
        EXPECT_NEAR(a.terms[k].omega, b.terms[k].omega, 1e-14);
        EXPECT_NEAR(a.terms[k].coeff, b.terms[k].coeff, 1e-13);
    }
}

TEST(AntiderivativeTerm, Values) {
    EXPECT_EQ(antiderivative_term(1.0, 0.0), 0.0);
    EXPECT_NEAR(antiderivative_term(2.5, 0.7), ref_antiderivative_25_07, 1e-15);
    for (double w : {0.2, 1.0, pi, 4.0, 6.0}) {
        EXPECT_NEAR(antiderivative_term(w, 1.0), (pi - w) / 2, 1e-15);
    }
}

TEST(AntiderivativeTerm, DerivativeIsTheSimpleFraction) {
    const double h = 1e-5;
    for (double w : {0.4, 2.2, 3.5, 5.9}) {
        for (double x : {0.1, 0.5, 0.9}) {
            const double fd = (antiderivative_term(w, x + h) - antiderivative_term(w, x - h)) / (2 * h);
            EXPECT_NEAR(fd, std::sin(w) / (x * x - 2 * x * std::cos(w) + 1), 1e-9);
        }
    }
}

TEST(AntiderivativeTerm, Errors) {
    expect_kind(ErrorKind::BranchError, [] { antiderivative_term(0.0, 0.5); });
    expect_kind(ErrorKind::BranchError, [] { antiderivative_term(7.0, 0.5); });
    expect_kind(ErrorKind::DomainError, [] { antiderivative_term(1.0, 1.5); });
}

TEST(IntegralAt, MatchesClosedAssembly) {
    for (int n = 1; n <= 20; ++n) {
        for (int p = 0; p < n; ++p) {
            for (double theta : {0.3, pi / 2, 2.8}) {
                for (double zeta : {0.1, pi / 2, 3.0}) {
                    const auto s = ispec(n, p, theta, zeta);
                    EXPECT_NEAR(integral_at(s, 1.0), integral_closed(s), 1e-11);
                }
            }
        }
    }
}

TEST(IntegralAt, MatchesQuadratureAtInteriorX) {
    const auto s = ispec(3, 1, 1.0, 2.0, UpperLimit::finite(0.6));
    EXPECT_NEAR(integral_at(s, 0.6), 0.30041655002149709005, 1e-14);
    EXPECT_NEAR(integral_at(s, 0.6), quad_x_domain(s).value, 1e-13);
    EXPECT_EQ(integral_at(s, 0.0), 0.0);
}

TEST(IntegralClosed, InfinityDoubles) {
    const auto one = ispec(4, 3, 2.0, 1.0);
    const auto inf = ispec(4, 3, 2.0, 1.0, UpperLimit::infinity());
    EXPECT_DOUBLE_EQ(integral_closed(inf), 2 * integral_closed(one));
    expect_kind(ErrorKind::DomainError, [] { integral_closed(ispec(2, 1, 1.0, 1.0, UpperLimit::finite(0.5))); });
}

TEST(IntegralClosed, ThetaPiLimit) {
    EXPECT_NEAR(integral_closed(ispec(2, 1, pi, pi / 2)), quad_x_domain(ispec(2, 1, pi, pi / 2)).value, 1e-13);
    EXPECT_NEAR(integral_closed(ispec(3, 0, pi, 1.0)), (1 - std::cos(1.0)) / 3, 1e-15);
}

TEST(PZeroReduction, Values) {
    EXPECT_NEAR(p_zero_reduction(1.0, pi / 2), pi / 4, 1e-15);
    EXPECT_NEAR(p_zero_reduction(2.0, pi), 0.25, 1e-15);
    for (double n : {0.5, 1.0, 3.0}) {
        for (double theta : {0.4, 2.0, 5.5}) {
            const IntegrandSpec s{n, {0.0, 0.0}, theta, pi / 2, UpperLimit::one()};
            // with p = 0 and ζ = π/2 the integrand is twice the reduced kernel
            EXPECT_NEAR(2 * p_zero_reduction(n, theta), quad_x_domain(s).value, 1e-12);
        }
    }
}

TEST(ViiReduction, Examples) {
    const auto r = vii_reduction_identity(2.0, 1.0, 1.0);
    EXPECT_NEAR(r.lhs, pi / 4, 1e-14);
    EXPECT_NEAR(r.rhs, pi / 4, 1e-14);
    const auto r2 = vii_reduction_identity(3.0, 1.4, 0.8);
    EXPECT_NEAR(r2.lhs, ref_vii_lhs_3_14_08, 1e-14);
    EXPECT_NEAR(r2.lhs, r2.rhs, 1e-13);
}

TEST(ViiReduction, HoldsForRandomArguments) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double n = 0.5 + 5 * u(rng);
        const double p = n * (0.02 + 0.96 * u(rng));
        const double x = 0.01 + 0.99 * u(rng);
        const auto r = vii_reduction_identity(n, p, x);
        EXPECT_NEAR(r.lhs, r.rhs, 1e-10) << n << " " << p << " " << x;
    }
}

TEST(ViiReduction, Errors) {
    EXPECT_THROW(vii_reduction_identity(2.0, 2.0, 0.5), Error);
    EXPECT_THROW(vii_reduction_identity(2.0, 0.0, 0.5), Error);
    EXPECT_THROW(vii_reduction_identity(2.0, 1.0, 1.5), Error);
    const auto z = vii_reduction_identity(2.0, 1.0, 0.0);
    EXPECT_EQ(z.lhs, 0.0);
    EXPECT_EQ(z.rhs, 0.0);
}
