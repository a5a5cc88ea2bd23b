#include <gtest/gtest.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>

#include "burgers/errors.hpp"
#include "burgers/exact.hpp"
#include "burgers/schemes.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace
{
struct RandomCase
{
    State state;
    SchemeParams params;
};

RandomCase random_case(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> size(8, 32);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    const auto n = static_cast<std::size_t>(size(rng));
    const Grid1D g = Grid1D::uniform(0.0, 1.0, n, Boundary::Periodic);
    State s{std::vector<double>(n), 0.0, g};
    for (double& v : s.values)
        v = val(rng);
    const double h = g.h();
    return {s, {0.05 + 0.05 * (val(rng) + 1.0), h, 0.1 * h * h, 1.0}};
}

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

void expect_close(const std::vector<double>& a, const std::vector<double>& b, double tol)
{
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_LE(std::abs(a[i] - b[i]), tol) << "node " << i;
}
}  // namespace

TEST(SchemeNames, RoundTrip)
{
    for (SchemeId id : all_schemes)
        EXPECT_EQ(parse_scheme(short_name(id)), id);
    EXPECT_THROW(parse_scheme("upwind"), InvalidParameter);
}

TEST(Omega, ClosureValues)
{
    EXPECT_DOUBLE_EQ(OmegaClosure::cancel().at_half_node(1.0, 3.0, 0.1, 0.5), 0.1 * 4.0 / 0.5);
    EXPECT_DOUBLE_EQ(OmegaClosure::custom(0.2).at_half_node(1.0, 3.0, 0.1, 0.5),
                     0.1 * 4.0 / 0.5 - 0.2 * 2.0 / 0.25);
    EXPECT_DOUBLE_EQ(OmegaClosure::zero().at_half_node(1.0, 3.0, 0.1, 0.5), 0.0);
}

TEST(Oracle, ExplicitStepsMatchPrintedFormulas)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial)
    {
        const RandomCase c = random_case(rng);
        const double tol = 16.0 * DBL_EPSILON * max_abs(c.state.values);
        expect_close(step_ftcs(c.state, c.params).values, oracle::ftcs(c.state.values, c.params), tol);
        expect_close(step_lax_wendroff(c.state, c.params).values,
                     oracle::lax_wendroff(c.state.values, c.params), tol);
        for (const OmegaClosure& om : {OmegaClosure::cancel(), OmegaClosure::custom(0.01), OmegaClosure::zero()})
            expect_close(step_semi_invariant(c.state, c.params, om).values,
                         oracle::semi_invariant(c.state.values, c.params, om), tol);
    }
}

TEST(Oracle, CrankNicolsonSatisfiesTrapezoidalEquations)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial)
    {
        const RandomCase c = random_case(rng);
        const CrankNicolsonStep r = crank_nicolson_step(c.state, c.params, 1e-15, 200);
        const auto res = oracle::crank_nicolson_residual(c.state.values, r.state.values, c.params);
        EXPECT_LE(max_abs(res), 16.0 * DBL_EPSILON * max_abs(c.state.values));
        EXPECT_GE(r.iterations, 1u);
    }
}

TEST(SemiInvariant, ReducesToFtcsWithoutOmegaOrCorrections)
{
    std::mt19937_64 rng(13);
    const RandomCase c = random_case(rng);
    const auto a = step_semi_invariant(c.state, c.params, OmegaClosure::zero(), false).values;
    const auto b = step_ftcs(c.state, c.params).values;
    expect_close(a, b, 4.0 * DBL_EPSILON * max_abs(c.state.values));
}

TEST(Schemes, ConstantStateIsSteady)
{
    const Grid1D g = Grid1D::uniform(0.0, 1.0, 16, Boundary::Periodic);
    const State s{std::vector<double>(16, 0.7), 0.0, g};
    const SchemeParams p{0.1, g.h(), 0.001, 0.7};
    for (SchemeId id : all_schemes)
    {
        SchemeConfig cfg;
        cfg.id = id;
        const State next = step(cfg, s, p);
        for (double v : next.values)
            EXPECT_NEAR(v, 0.7, 1e-15) << short_name(id);
        EXPECT_DOUBLE_EQ(next.time, 0.001);
    }
}

TEST(Schemes, DirichletNeedsBoundaryData)
{
    const Grid1D g = Grid1D::uniform(0.0, 1.0, 16, Boundary::DirichletExact);
    const State s{std::vector<double>(16, 0.5), 0.0, g};
    const SchemeParams p{0.1, g.h(), 0.001, 0.5};
    EXPECT_THROW(step_ftcs(s, p), BoundaryDataMissing);
    EXPECT_THROW(step_crank_nicolson(s, p), BoundaryDataMissing);
}

TEST(CrankNicolson, DirichletGhostsFromExactData)
{
    const ShockSolution shock{0.5, 0.5, 0.2, 0.0};
    const ScalarField f = [shock](double x, double t) { return shock(x, t); };
    const Grid1D g = Grid1D::uniform(-1.0, 2.0, 64, Boundary::DirichletExact).with_boundary_data(f);
    const double h = g.h();
    const SchemeParams p{0.2, h, 0.5 * h, 1.0};
    State s = State::sample(g, f, 0.0);
    for (int k = 0; k < 20; ++k)
        s = step_crank_nicolson(s, p);
    EXPECT_LT(l2_error(s, f), 1e-3);
}

TEST(CrankNicolson, ReportsNonConvergence)
{
    std::mt19937_64 rng(14);
    const RandomCase c = random_case(rng);
    EXPECT_THROW(crank_nicolson_step(c.state, c.params, 1e-300, 1), ConvergenceFailure);
    EXPECT_THROW(crank_nicolson_step(c.state, c.params, 0.0, 10), InvalidParameter);
}

TEST(Run, ObserversSeeEveryStep)
{
    const Grid1D g = Grid1D::uniform(0.0, 2.0, 32, Boundary::Periodic);
    const WavySolution w{2.0, 0.1, 2.0};
    const State s = State::sample(g, w, 0.0);
    const SchemeParams p{0.1, g.h(), 0.2 * g.h() * g.h(), 0.2};
    std::vector<std::size_t> seen;
    const Observer obs = [&](const State&, std::size_t k) { seen.push_back(k); };
    const RunResult r = run({}, s, p, 5, std::span(&obs, 1));
    EXPECT_EQ(r.steps_completed, 5u);
    EXPECT_FALSE(r.blowup_step);
    EXPECT_EQ(seen, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
    EXPECT_THROW(run({}, s, p, 0), InvalidParameter);
}

TEST(Run, BlowUpIsRecordedNotThrown)
{
    const Grid1D g = Grid1D::uniform(0.0, 2.0, 32, Boundary::Periodic);
    const State s = State::sample(g, [](double x, double) { return std::sin(10.0 * x); }, 0.0);
    const SchemeParams p{1.0, g.h(), 10.0 * g.h() * g.h(), 1.0};  // S = 10
    const RunResult r = run({}, s, p, 100000);
    ASSERT_TRUE(r.blowup_step);
    EXPECT_EQ(r.steps_completed, *r.blowup_step);
    EXPECT_TRUE(r.blowup_index);
}

TEST(Run, CheckFiniteFlagsFirstBadNode)
{
    const std::vector<double> v{1.0, 2.0, NAN, INFINITY};
    try
    {
        check_finite(v);
        FAIL() << "expected BlowUp";
    }
    catch (const BlowUp& e)
    {
        EXPECT_EQ(e.index(), 2u);
    }
}
