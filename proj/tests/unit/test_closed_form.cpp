#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kernint/closed_form.hpp"
#include "kernint/errors.hpp"

using namespace kernint;

namespace {

// High-precision quadrature of the defining integrals (tests/oracle/freeze_values.py).
constexpr double ref_S_1_03_2 = 0.86922040985170041214;
constexpr double ref_P_1_03 = 1.3637672736893722092;
constexpr double ref_sech_1_2 = 0.050573192552086341547;
constexpr double ref_sech_half_pi_1 = 0.62602016562607381154;
constexpr double ref_sech2_1 = 0.27202905498213316295;
constexpr double ref_theta_pi_09 = 9.1497666461674676685;
constexpr double ref_f_2_half = 1.4809609793861220823;
constexpr double ref_f_e_half = 1.3930118454725417224;
constexpr double ref_fcos_2_1 = 0.11587735477718382771;
constexpr double ref_tan_third = 0.9068996821171089253;

void expect_rel(double got, double want, double rel) {
    EXPECT_NEAR(got, want, rel * std::max(1.0, std::abs(want)));
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

TEST(EvalS, SechIntegral) {
    const auto v = eval_S(pi / 2, 0.0, pi / 2);
    expect_rel(v.value, pi / 2, 1e-15);
    EXPECT_EQ(v.limit_applied, LimitApplied::BZero);
}

TEST(EvalS, ThetaPiLimit) {
    const auto v = eval_S(0.0, 0.5, pi / 2);
    expect_rel(v.value, pi / 2, 1e-15);
    EXPECT_EQ(v.limit_applied, LimitApplied::AZero);
}

TEST(EvalS, MatchesOracle) {
    expect_rel(eval_S(1.0, 0.3, 2.0).value, ref_S_1_03_2, 2e-15);
}

TEST(EvalS, BothLimits) {
    const auto v = eval_S(0.0, 0.0, 1.0);
    expect_rel(v.value, 1.0 + std::cos(1.0), 1e-15);
    EXPECT_EQ(v.limit_applied, LimitApplied::Both);
}

TEST(EvalS, LimitFormsAtZeroB) {
    for (double a : {0.3, 1.0, 2.5}) {
        for (double c : {0.0, 1.0, 3.0}) {
            expect_rel(eval_S(a, 0.0, c).value, a * (1 + std::cos(c)) / std::sin(a), 1e-14);
        }
    }
    for (double b : {0.1, 0.5, -0.7}) {
        expect_rel(eval_S(0.0, b, 2.0).value, pi * b / std::sin(pi * b) + std::cos(2.0), 1e-14);
    }
}

TEST(EvalS, OutsideStrip) {
    expect_kind(ErrorKind::DomainError, [] { eval_S(pi, 0.2, 1.0); });
    expect_kind(ErrorKind::DomainError, [] { eval_S(1.0, 1.0, 1.0); });
    expect_kind(ErrorKind::DomainError, [] { eval_S(complex(-3.2, 0.5), complex(0.1, 0.0), 1.0); });
    expect_kind(ErrorKind::NearPole, [] { eval_S(1.0, 1.0 - 1e-12, 1.0); });
}

TEST(EvalS, FormulaIgnoresStrip) {
    // the unchecked formula still evaluates
    EXPECT_TRUE(std::isfinite(formula_S(complex(-5.0, 0.0), complex(0.5, 0.0), 1.0).value.real()));
}

TEST(EvalP, Examples) {
    expect_rel(eval_P(pi / 2, 0.5).value, pi / std::sqrt(2.0), 1e-15);
    expect_rel(eval_P(1.0, 0.3).value, ref_P_1_03, 2e-15);
    expect_rel(eval_P(1.2, 0.0).value, 1.2 / std::sin(1.2), 1e-15);
}

TEST(EvalP, AgreesWithSAtRightAngle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(-3.1, 3.1);
    std::uniform_real_distribution<double> ub(-0.99, 0.99);
    for (int i = 0; i < 10000; ++i) {
        const double a = ua(rng);
        const double b = ub(rng);
        const double p = eval_P(a, b).value;
        EXPECT_NEAR(p, eval_S(a, b, pi / 2).value, 1e-13 * (1 + std::abs(p)));
    }
}

TEST(EvalP, EvenInBothArguments) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(-3.1, 3.1);
    std::uniform_real_distribution<double> ub(-0.99, 0.99);
    for (int i = 0; i < 2000; ++i) {
        const double a = ua(rng);
        const double b = ub(rng);
        const double p = eval_P(a, b).value;
        EXPECT_NEAR(eval_P(a, -b).value, p, 1e-13 * std::abs(p));
        EXPECT_NEAR(eval_P(-a, b).value, p, 1e-13 * std::abs(p));
    }
}

TEST(EvalP, ImaginaryBMatchesSechTransform) {
    for (double a = 0.05; a < pi; a += 0.3) {
        for (double q = -3.0; q <= 3.0; q += 0.25) {
            const auto v = eval_P(complex(a, 0.0), complex(0.0, q)).value;
            const double s = eval_sech_transform(a, q);
            EXPECT_NEAR(v.real(), s, 1e-12 * std::abs(s));
            EXPECT_LT(std::abs(v.imag()), 1e-13 * (1 + std::abs(v.real())));
        }
    }
}

TEST(EvalP, ConvergesToThetaPiLimit) {
    const double b = 0.37;
    const double limit = eval_theta_pi_limit(b).value;
    double previous = INFINITY;
    for (int k = 3; k <= 8; ++k) {
        const double gap = std::abs(eval_P(std::pow(10.0, -k), b).value - limit);
        EXPECT_LE(gap, previous);
        previous = gap;
    }
    EXPECT_LT(previous, 1e-14);
}

TEST(EvalP, RealInputsGiveRealValues) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ua(-3.1, 3.1);
    std::uniform_real_distribution<double> ub(-0.99, 0.99);
    for (int i = 0; i < 1000; ++i) {
        const auto v = eval_P(complex(ua(rng), 0.0), complex(ub(rng), 0.0)).value;
        EXPECT_LT(std::abs(v.imag()), 1e-13 * (1 + std::abs(v.real())));
    }
}

TEST(SecCase, Examples) {
    expect_rel(eval_sec_case(0.0), pi / 2, 1e-15);
    expect_rel(eval_sec_case(0.5), pi / std::sqrt(2.0), 1e-15);
    expect_rel(eval_sec_case(2.0 / 3.0), pi, 1e-14);
    for (double b = -0.95; b < 0.96; b += 0.05) {
        expect_rel(eval_sec_case(b), (pi / 2) / std::cos(pi * b / 2), 1e-13);
    }
    expect_kind(ErrorKind::DomainError, [] { eval_sec_case(1.0); });
}

TEST(TanCase, Examples) {
    EXPECT_EQ(eval_tan_case(0.0), 0.0);
    expect_rel(eval_tan_case(0.5), pi / 2, 1e-15);
    expect_rel(eval_tan_case(1.0 / 3.0), ref_tan_third, 1e-15);
    expect_kind(ErrorKind::DomainError, [] { eval_tan_case(-1.0); });
}

TEST(SechTransform, Examples) {
    expect_rel(eval_sech_transform(pi / 2, 0.0), pi / 2, 1e-15);
    expect_rel(eval_sech_transform(pi / 2, 1.0), ref_sech_half_pi_1, 1e-14);
    expect_rel(eval_sech_transform(1.0, 2.0), ref_sech_1_2, 1e-14);
    // a = 0 is the θ = π edge and evaluates through the limit
    expect_rel(eval_sech_transform(0.0, 0.5), pi * 0.5 / std::sinh(pi * 0.5), 1e-14);
    expect_kind(ErrorKind::DomainError, [] { eval_sech_transform(pi, 1.0); });
}

TEST(Sech2Transform, Examples) {
    EXPECT_DOUBLE_EQ(eval_sech2_transform(0.0), 1.0);
    expect_rel(eval_sech2_transform(1.0), ref_sech2_1, 1e-14);
    EXPECT_DOUBLE_EQ(eval_sech2_transform(-1.0), eval_sech2_transform(1.0));
}

TEST(ThetaPiLimit, Examples) {
    EXPECT_DOUBLE_EQ(eval_theta_pi_limit(0.0).value, 1.0);
    expect_rel(eval_theta_pi_limit(0.5).value, pi / 2, 1e-15);
    expect_rel(eval_theta_pi_limit(0.9).value, ref_theta_pi_09, 1e-14);
    expect_kind(ErrorKind::NearPole, [] { eval_theta_pi_limit(1.0 - 1e-13); });
}

TEST(ThetaPiLimit, IsTheLimitOfP) {
    for (double b = 0.1; b < 0.95; b += 0.1) {
        EXPECT_NEAR(eval_P(1e-6, b).value, eval_theta_pi_limit(b).value, 1e-5);
    }
}

TEST(FForm, Examples) {
    expect_rel(eval_f_form(complex(2.0, 0.0), complex(0.5, 0.0)).value.real(), ref_f_2_half, 1e-14);
    expect_rel(eval_f_form(complex(std::exp(1.0), 0.0), complex(0.5, 0.0)).value.real(), ref_f_e_half, 1e-14);
    // f = 1 recovers the θ = π value
    expect_rel(eval_f_form(complex(1.0, 0.0), complex(0.3, 0.0)).value.real(), pi * 0.3 / std::sin(pi * 0.3),
               1e-14);
    EXPECT_THROW(eval_f_form(complex(-1.0, 0.0), complex(0.5, 0.0)), Error);
    EXPECT_THROW(eval_f_form(complex(0.0, 0.0), complex(0.5, 0.0)), Error);
}

TEST(FForm, MatchesExplicitExpression) {
    for (double f : {1.1, 2.0, 10.0}) {
        for (double b : {-0.8, 0.2, 0.6}) {
            const double want = pi * (std::pow(f, b) - std::pow(f, -b)) / ((f - 1 / f) * std::sin(pi * b));
            expect_rel(eval_f_form(complex(f, 0.0), complex(b, 0.0)).value.real(), want, 1e-13);
        }
    }
}

TEST(FCosForm, Examples) {
    expect_rel(eval_f_cos_form(2.0, 1.0), ref_fcos_2_1, 1e-14);
    EXPECT_NEAR(eval_f_cos_form(std::exp(pi), 1.0), 0.0, 1e-15);
    expect_rel(eval_f_cos_form(3.0, 0.0), std::log(3.0) / (3.0 - 1.0 / 3.0), 1e-15);
    expect_rel(eval_f_cos_form(1.0, 1.0), 0.5 * pi / std::sinh(pi), 1e-14);
    EXPECT_THROW(eval_f_cos_form(0.0, 1.0), Error);
}

TEST(FCosForm, MatchesExplicitExpression) {
    for (double f : {1.1, 2.0, 10.0}) {
        for (double q : {-2.0, 0.5, 3.0}) {
            const double want =
                2 * pi * std::sin(q * std::log(f)) / ((f - 1 / f) * (std::exp(pi * q) - std::exp(-pi * q)));
            expect_rel(eval_f_cos_form(f, q), want, 1e-13);
        }
    }
}

TEST(Sinc, TaylorBranchIsContinuous) {
    for (double z : {1e-9, 9.99e-9, 1.0001e-8, 1e-7}) {
        EXPECT_NEAR(sinc(z), std::sin(z) / z, 1e-16);
    }
    EXPECT_EQ(sinc(0.0), 1.0);
    EXPECT_EQ(sinc(complex(0.0, 0.0)), complex(1.0, 0.0));
}
