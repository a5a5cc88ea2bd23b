#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/grid.hpp"

using namespace burgers;

namespace
{
State periodic_ramp(std::size_t n)
{
    const Grid1D g(0.0, 1.0, n, Boundary::Periodic);
    State s{std::vector<double>(n), 0.0, g};
    for (std::size_t i = 0; i < n; ++i)
        s.values[i] = static_cast<double>(i * i) + 0.5 * static_cast<double>(i);
    return s;
}

std::vector<double> hs()
{
    std::vector<double> h;
    for (int k = 4; k <= 9; ++k)
        h.push_back(std::ldexp(1.0, -k));
    return h;
}

HighPrecision hp_sin(const HighPrecision& x) { return boost::multiprecision::sin(x); }
HighPrecision hp_cos(const HighPrecision& x) { return boost::multiprecision::cos(x); }
HighPrecision hp_exp(const HighPrecision& x) { return boost::multiprecision::exp(x); }
}  // namespace

TEST(Grid, UniformSpacingAndNodes)
{
    const Grid1D g = Grid1D::uniform(-1.0, 2.0, 8, Boundary::Periodic);
    EXPECT_DOUBLE_EQ(g.h(), 0.25);
    EXPECT_DOUBLE_EQ(g.x(0), -1.0);
    EXPECT_DOUBLE_EQ(g.x(7), 0.75);
    EXPECT_DOUBLE_EQ(g.length(), 2.0);
}

TEST(Grid, RejectsBadParameters)
{
    EXPECT_THROW(Grid1D(0.0, 0.0, 8, Boundary::Periodic), InvalidParameter);
    EXPECT_THROW(Grid1D(0.0, 0.1, 4, Boundary::Periodic), InvalidParameter);
}

TEST(Grid, OriginOffsetMovesNodes)
{
    const Grid1D g = Grid1D(0.0, 0.5, 6, Boundary::Periodic).with_origin_offset(0.2);
    EXPECT_DOUBLE_EQ(g.x(2), 1.2);
}

TEST(Padding, PeriodicWraps)
{
    const State s = periodic_ramp(6);
    const Padded p = pad(s, 2);
    EXPECT_EQ(p[-1], s.values[5]);
    EXPECT_EQ(p[-2], s.values[4]);
    EXPECT_EQ(p[6], s.values[0]);
    EXPECT_EQ(p[7], s.values[1]);
}

TEST(Padding, DirichletUsesBoundaryData)
{
    const Grid1D g = Grid1D(0.0, 0.5, 5, Boundary::DirichletExact)
                         .with_boundary_data([](double x, double t) { return 10.0 * x + t; });
    const State s{std::vector<double>(5, 0.0), 2.0, g};
    const Padded p = pad(s, 2);
    EXPECT_DOUBLE_EQ(p[-1], -5.0 + 2.0);
    EXPECT_DOUBLE_EQ(p[-2], -10.0 + 2.0);
    EXPECT_DOUBLE_EQ(p[5], 25.0 + 2.0);
}

TEST(Padding, DirichletWithoutDataThrows)
{
    const Grid1D g(0.0, 0.5, 5, Boundary::DirichletExact);
    const State s{std::vector<double>(5, 1.0), 0.0, g};
    EXPECT_THROW(pad(s, 1), BoundaryDataMissing);
    EXPECT_NO_THROW(pad(s, 0));
}

TEST(Operators, MatchLiteralStencils)
{
    const State s = periodic_ramp(9);
    const auto& v = s.values;
    auto at = [&](long i) { return v[static_cast<std::size_t>((i % 9 + 9) % 9)]; };

    const auto d = delta(s);
    const auto m = mu(s);
    const auto dm = delta_minus(s);
    const auto md = mu_delta(s);
    const auto md3 = mu_delta3(s);
    const auto d2 = delta_pow(s, 2);
    const auto d3 = delta_pow(s, 3);
    const auto d4 = delta_pow(s, 4);
    const auto half = shift(s, 0.5);
    const auto back = shift(s, -0.5);
    const auto two = shift(s, 2.0);
    for (long i = 0; i < 9; ++i)
    {
        const auto k = static_cast<std::size_t>(i);
        EXPECT_EQ(d[k], at(i + 1) - at(i));
        EXPECT_EQ(m[k], 0.5 * (at(i) + at(i + 1)));
        EXPECT_EQ(dm[k], at(i) - at(i - 1));
        EXPECT_EQ(md[k], 0.5 * (at(i + 1) - at(i - 1)));
        EXPECT_DOUBLE_EQ(md3[k], 0.5 * (at(i + 2) - 2 * at(i + 1) + 2 * at(i - 1) - at(i - 2)));
        EXPECT_DOUBLE_EQ(d2[k], at(i + 1) - 2 * at(i) + at(i - 1));
        EXPECT_DOUBLE_EQ(d3[k], at(i + 2) - 3 * at(i + 1) + 3 * at(i) - at(i - 1));
        EXPECT_DOUBLE_EQ(d4[k], at(i + 2) - 4 * at(i + 1) + 6 * at(i) - 4 * at(i - 1) + at(i - 2));
        EXPECT_EQ(half[k], 0.5 * (at(i) + at(i + 1)));
        EXPECT_EQ(back[k], 0.5 * (at(i - 1) + at(i)));
        EXPECT_EQ(two[k], at(i + 2));
    }
}

TEST(Operators, DeltaOfQuadraticIsConstant)
{
    // u_i = i^2 on a periodic grid away from the wrap: delta^2 u = 2.
    const State s = periodic_ramp(12);
    const auto d2 = delta_pow(s, 2);
    for (std::size_t i = 1; i + 1 < 12; ++i)
        EXPECT_DOUBLE_EQ(d2[i], 2.0);
}

TEST(Operators, RejectsUnsupportedArguments)
{
    const State s = periodic_ramp(8);
    EXPECT_THROW(delta_pow(s, 5), InvalidParameter);
    EXPECT_THROW(shift(s, 0.25), InvalidParameter);
}

TEST(Accuracy, SecondOrderOperators)
{
    const auto h = hs();
    EXPECT_NEAR(operator_accuracy_check(FdOperator::MuDelta, hp_sin, hp_cos, 0.3, h), 2.0, 0.2);
    EXPECT_NEAR(operator_accuracy_check(
                    FdOperator::Delta2, hp_sin, [](const HighPrecision& x) { return -hp_sin(x); },
                    0.3, h),
                2.0, 0.2);
}

TEST(Accuracy, FourthOrderComposites)
{
    const auto h = hs();
    EXPECT_NEAR(operator_accuracy_check(FdOperator::MuDeltaFourth, hp_exp, hp_exp, 0.2, h), 4.0, 0.2);
    EXPECT_NEAR(operator_accuracy_check(FdOperator::Delta2Fourth, hp_exp, hp_exp, 0.2, h), 4.0, 0.2);
}

TEST(Accuracy, DegenerateSampleOnPolynomialData)
{
    // mu delta is exact on quadratics, so the error is zero.
    const auto f = [](const HighPrecision& x) { return x * x; };
    const auto df = [](const HighPrecision& x) { return 2 * x; };
    EXPECT_THROW(operator_accuracy_check(FdOperator::MuDelta, f, df, 0.5, hs()), DegenerateSample);
}

TEST(Accuracy, RejectsBadSequences)
{
    const std::vector<double> two{0.1, 0.05};
    const std::vector<double> rising{0.05, 0.1, 0.2};
    EXPECT_THROW(operator_accuracy_check(FdOperator::MuDelta, hp_sin, hp_cos, 0.0, two), InvalidParameter);
    EXPECT_THROW(operator_accuracy_check(FdOperator::MuDelta, hp_sin, hp_cos, 0.0, rising),
                 InvalidParameter);
}

TEST(Norms, L2ErrorOfConstantOffset)
{
    const Grid1D g = Grid1D::uniform(0.0, 2.0, 16, Boundary::Periodic);
    const State s = State::sample(g, [](double x, double) { return x + 0.5; }, 0.0);
    EXPECT_NEAR(l2_error(s, [](double x, double) { return x; }), 0.5 * std::sqrt(2.0), 1e-15);
}

TEST(Params, DimensionlessNumbers)
{
    const SchemeParams p{0.1, 0.05, 0.01, 2.0};
    EXPECT_DOUBLE_EQ(p.cfl(), 0.4);
    EXPECT_DOUBLE_EQ(p.s(), 0.4);
    EXPECT_DOUBLE_EQ(p.s_star(), 0.4 + 0.5 * 0.4 * 0.4);
    EXPECT_DOUBLE_EQ(p.re_h(), 1.0);
    EXPECT_THROW((SchemeParams{0.0, 0.1, 0.1, 1.0}.re_h()), InvalidParameter);
}
