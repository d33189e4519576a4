#include <gtest/gtest.h>

#include <cmath>

#include "cli_support.hpp"
#include "kernint/errors.hpp"

using namespace kernint;
using namespace kernint::cli;

TEST(ParseComplex, Forms) {
    EXPECT_EQ(parse_complex("0.5"), complex(0.5, 0.0));
    EXPECT_EQ(parse_complex("-2"), complex(-2.0, 0.0));
    EXPECT_EQ(parse_complex("1.5i"), complex(0.0, 1.5));
    EXPECT_EQ(parse_complex("-i"), complex(0.0, -1.0));
    EXPECT_EQ(parse_complex("i"), complex(0.0, 1.0));
    EXPECT_EQ(parse_complex("0.5+0.25i"), complex(0.5, 0.25));
    EXPECT_EQ(parse_complex("-0.5-2i"), complex(-0.5, -2.0));
    EXPECT_EQ(parse_complex("1e-3+2e+1i"), complex(1e-3, 20.0));
}

TEST(ParseComplex, Rejects) {
    for (const char* bad : {"", "abc", "1+", "1+2j", "1 + 2i", "1..2"}) {
        try {
            parse_complex(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
        }
    }
}

TEST(ParseUpper, Forms) {
    EXPECT_EQ(parse_upper("1"), UpperLimit::one());
    EXPECT_EQ(parse_upper("inf"), UpperLimit::infinity());
    EXPECT_EQ(parse_upper("0.5").kind, UpperLimit::Kind::Finite);
    EXPECT_THROW(parse_upper("0"), Error);
    EXPECT_THROW(parse_upper("-2"), Error);
}

TEST(ParseGrid, RangesAndLists) {
    EXPECT_EQ(parse_real_grid("0.5"), std::vector<double>{0.5});
    EXPECT_EQ(parse_real_grid("1,2,3"), (std::vector<double>{1, 2, 3}));
    const auto r = parse_real_grid("0:0.1:1");
    ASSERT_EQ(r.size(), 11u);
    EXPECT_NEAR(r.back(), 1.0, 1e-15);
    EXPECT_EQ(parse_real_grid("1:1:3"), (std::vector<double>{1, 2, 3}));
    EXPECT_THROW(parse_real_grid("1:0:3"), Error);
    const auto c = parse_complex_grid("1,0.5i,2-i");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], complex(0.0, 0.5));
    EXPECT_EQ(c[2], complex(2.0, -1.0));
}

TEST(Lcg, KnownSequence) {
    Lcg g(0);
    EXPECT_EQ(g.next(), 1442695040888963407ull);
    EXPECT_EQ(g.next(), 1442695040888963407ull * 6364136223846793005ull + 1442695040888963407ull);
    Lcg h(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = h.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(RandomSpecs, ReproducibleAndInRange) {
    const auto a = random_specs(500, 42);
    const auto b = random_specs(500, 42);
    ASSERT_EQ(a.size(), 500u);
    int integer = 0;
    int infinite = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].p, b[i].p);
        EXPECT_EQ(a[i].theta, b[i].theta);
        EXPECT_GE(a[i].n, 1.0);
        EXPECT_LE(a[i].n, 6.0);
        EXPECT_LT(std::abs(a[i].p.real()), a[i].n);
        EXPECT_GE(a[i].theta, 0.05);
        EXPECT_LE(a[i].theta, two_pi - 0.05);
        EXPECT_GE(a[i].zeta, 0.0);
        EXPECT_LE(a[i].zeta, pi);
        integer += has_integer_exponents(a[i]) ? 1 : 0;
        infinite += a[i].upper.kind == UpperLimit::Kind::Infinity ? 1 : 0;
    }
    EXPECT_GT(integer, 150);
    EXPECT_GT(infinite, 70);
    EXPECT_NE(random_specs(5, 1)[0].theta, random_specs(5, 2)[0].theta);
}

TEST(Json, SpecRoundTrip) {
    const IntegrandSpec s{2.5, {0.5, -0.25}, 1.25, 2.0, UpperLimit::infinity()};
    const auto back = spec_from_json(to_json(s));
    EXPECT_EQ(back.n, s.n);
    EXPECT_EQ(back.p, s.p);
    EXPECT_EQ(back.theta, s.theta);
    EXPECT_EQ(back.zeta, s.zeta);
    EXPECT_EQ(back.upper, s.upper);
}

TEST(Json, ReportCarriesSpec) {
    const IntegrandSpec s{1.0, {0.5, 0.0}, pi / 2, pi / 2, UpperLimit::one()};
    const auto j = to_json(verify_point(s, 1e-9));
    EXPECT_EQ(j.at("verdict"), "Agree");
    EXPECT_TRUE(j.at("pf").is_null());
    EXPECT_EQ(spec_from_json(j).n, 1.0);
}

TEST(ReadGrid, ArrayAndLines) {
    const auto a = read_grid(R"([{"n": 1, "p": 0.5}, {"n": 2, "p": "1.5i", "upper": "inf"}])");
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[1].p, complex(0.0, 1.5));
    EXPECT_EQ(a[1].upper, UpperLimit::infinity());
    const auto b = read_grid("{\"n\": 3, \"p\": 1}\n\n{\"n\": 4, \"theta\": 2}\n");
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[1].theta, 2.0);
}

TEST(ReadGrid, Errors) {
    for (const char* bad : {"", "[1, 2]", "{\"p\": 1}", "{\"n\": \"x\"}", "{\"n\": 1, \"upper\": -1}", "{oops"}) {
        try {
            read_grid(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
        }
    }
}

TEST(Csv, RowMatchesHeader) {
    const auto r = verify_point({3.0, {1.0, 0.0}, 1.0, 2.0, UpperLimit::one()}, 1e-9);
    const auto row = csv_row(r);
    const auto commas = [](std::string_view s) { return std::count(s.begin(), s.end(), ','); };
    EXPECT_EQ(commas(row), commas(csv_header));
    EXPECT_NE(row.find("Agree"), std::string::npos);
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(std::stod(format_double(pi)), pi);
    EXPECT_EQ(format_double(INFINITY), "inf");
}

TEST(Sweep, OrderAndThreadIndependence) {
    const auto specs = random_specs(40, 7);
    const auto one = sweep(specs, 1e-9, ThetaPolicy::AsGiven, 1);
    const auto many = sweep(specs, 1e-9, ThetaPolicy::AsGiven, 4);
    ASSERT_EQ(one.size(), specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        EXPECT_EQ(to_json(one[i]).dump(), to_json(many[i]).dump());
        EXPECT_EQ(one[i].spec.theta, specs[i].theta);
    }
}
