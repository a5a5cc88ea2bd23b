#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/exact.hpp"
#include "burgers/modified_equation.hpp"
#include "burgers/symmetry.hpp"
#include "fixtures.hpp"

using namespace burgers;

namespace
{
std::vector<JetPoint> jets(const EvolutionEquation& eq, int count, unsigned seed,
                           const JetSampling& sampling = {})
{
    std::mt19937_64 rng(seed);
    std::vector<JetPoint> out;
    for (int k = 0; k < count; ++k)
        out.push_back(sample_constrained_jet(eq, rng, sampling));
    return out;
}

std::vector<double> relative_residuals(const GroupGenerator& g, const EvolutionEquation& eq,
                                       const std::vector<JetPoint>& js, bool da)
{
    std::vector<double> r;
    for (const JetPoint& j : js)
        r.push_back(da ? da_invariance_residual(g, eq, j).relative()
                       : pde_invariance_residual(g, eq, j).relative());
    std::sort(r.begin(), r.end());
    return r;
}

void expect_sigma(const Prolongation& got, const fixture::Sigma& want)
{
    for (const auto& [key, value] : want)
    {
        ASSERT_TRUE(got.contains(key)) << key.first << "," << key.second;
        EXPECT_NEAR(got.at(key), value, 1e-12 * (1.0 + std::abs(value)))
            << "sigma(" << key.first << "," << key.second << ")";
    }
}

const PointCoords sample_point{0.3, 0.4, -0.7, 0.1, 0.01, 0.2};
}  // namespace

TEST(Prolongation, MatchesHandDerivedCoefficients)
{
    JetSampling deep;
    deep.t_levels = 4;
    for (const JetPoint& j : jets(burgers_equation(), 5, 1, deep))
    {
        expect_sigma(prolong_coefficients(burgers_generator(3), j, 3), fixture::dilatation(j, 3));
        expect_sigma(prolong_coefficients(burgers_generator(5), j, 3), fixture::galilean(j, 3));
        expect_sigma(prolong_coefficients(burgers_generator(4), j, 3), fixture::projective(j));
    }
}

TEST(Prolongation, TranslationsHaveZeroCoefficients)
{
    const JetPoint j = jets(burgers_equation(), 1, 2)[0];
    for (int i : {1, 2})
        for (const auto& [key, value] : prolong_coefficients(burgers_generator(i), j, 2))
            EXPECT_EQ(value, 0.0);
}

TEST(Invariance, BurgersGeneratorsAreSymmetries)
{
    const auto js = jets(burgers_equation(), 50, 3);
    for (const GroupGenerator& g : burgers_generators())
        EXPECT_LE(relative_residuals(g, burgers_equation(), js, false).back(), 1e-12) << g.name;
}

TEST(Invariance, CbkdvBreaksScalingsAndBoost)
{
    const EvolutionEquation eq = cbkdv_equation({1.0, 0.7, -0.3, 0.2});
    const auto js = jets(eq, 50, 4);
    for (int i = 1; i <= 6; ++i)
    {
        const auto r = relative_residuals(burgers_generator(i), eq, js, false);
        if (i <= 2)
            EXPECT_LE(r.back(), 1e-12) << i;
        else
            EXPECT_GE(r[r.size() / 2], 1e-2) << i;
    }
}

TEST(Invariance, DifferentialApproximationsKeepTheirGroup)
{
    JetSampling s;
    s.with_steps = true;
    s.t_levels = 1;
    for (SchemeId id : all_schemes)
    {
        const DifferentialRepresentation rep = differential_representation(id);
        const auto js = jets(rep.equation, 20, 5, s);
        for (const GroupGenerator& g : differential_approximation_generators())
            EXPECT_LE(relative_residuals(g, rep.equation, js, true).back(), 1e-12)
                << short_name(id) << " " << g.name;
    }
}

TEST(Invariance, GalileanBoostBreaksClassicalApproximations)
{
    JetSampling s;
    s.with_steps = true;
    s.t_levels = 1;
    const GroupGenerator boost = burgers_generator(5);
    for (SchemeId id : {SchemeId::FTCS, SchemeId::LaxWendroff, SchemeId::CrankNicolson})
    {
        const DifferentialRepresentation rep = differential_representation(id);
        const auto r = relative_residuals(boost, rep.equation, jets(rep.equation, 20, 6, s), true);
        EXPECT_GE(r[r.size() / 2], 1e-3) << short_name(id);
    }
    const DifferentialRepresentation semi = differential_representation(SchemeId::SemiInvariant);
    EXPECT_LE(relative_residuals(boost, semi.equation, jets(semi.equation, 20, 6, s), true).back(),
              1e-12);
}

TEST(Invariance, DaRequiresSteps)
{
    const JetPoint j = jets(burgers_equation(), 1, 7)[0];
    EXPECT_THROW(da_invariance_residual(burgers_generator(1),
                                        differential_representation(SchemeId::FTCS).equation, j),
                 InvalidParameter);
}

TEST(FiniteTransforms, AgreeWithFlowOfGenerator)
{
    std::vector<GroupGenerator> all = burgers_generators();
    for (const GroupGenerator& g : differential_approximation_generators())
        all.push_back(g);
    for (const GroupGenerator& g : all)
        for (double eps : {0.3, -0.2, 1.4, 0.6})
        {
            if (g.parameterization == Parameterization::Multiplicative && eps <= 0.0)
                continue;
            const PointCoords a = finite_transform(g, eps, sample_point);
            const PointCoords b = integrate_generator_flow(g, eps, sample_point, 400);
            for (auto m : {&PointCoords::x, &PointCoords::t, &PointCoords::u, &PointCoords::h,
                           &PointCoords::tau, &PointCoords::nu})
                EXPECT_NEAR(a.*m, b.*m, 1e-9 * (1.0 + std::abs(a.*m))) << g.name << " eps=" << eps;
        }
}

TEST(FiniteTransforms, GroupLaws)
{
    for (const GroupGenerator& g : burgers_generators())
    {
        const double e1 = g.parameterization == Parameterization::Additive ? 0.25 : 1.5;
        const double e2 = g.parameterization == Parameterization::Additive ? -0.1 : 0.8;
        const PointCoords back =
            finite_transform(g, g.inverse_parameter(e1), finite_transform(g, e1, sample_point));
        EXPECT_NEAR(back.x, sample_point.x, 1e-14) << g.name;
        EXPECT_NEAR(back.u, sample_point.u, 1e-14) << g.name;
        const PointCoords two = finite_transform(g, e2, finite_transform(g, e1, sample_point));
        const PointCoords one = finite_transform(g, g.compose_parameters(e1, e2), sample_point);
        EXPECT_NEAR(two.t, one.t, 1e-14) << g.name;
        EXPECT_NEAR(two.u, one.u, 1e-14) << g.name;
        const PointCoords id = finite_transform(g, g.identity_parameter(), sample_point);
        EXPECT_EQ(id.x, sample_point.x);
        EXPECT_EQ(id.nu, sample_point.nu);
    }
}

TEST(FiniteTransforms, DomainErrors)
{
    const PointCoords p{0.3, 0.5, 1.0, 0.1, 0.01, 0.2};
    EXPECT_THROW(finite_transform(burgers_generator(4), 2.0, p), DomainError);
    EXPECT_THROW(finite_transform(burgers_generator(3), 0.0, p), DomainError);
    EXPECT_THROW(finite_transform(burgers_generator(6), -1.0, p), DomainError);
    EXPECT_THROW(integrate_generator_flow(burgers_generator(1), 0.1, p, 8), InvalidParameter);
}

TEST(Solutions, ImagesOfTheShockStaySolutions)
{
    const ShockSolution shock{0.3, 0.8, 0.2, 0.1};
    const std::vector<std::pair<int, double>> cases{{1, 0.4}, {2, 0.3}, {3, 1.5},
                                                    {4, 0.2}, {5, -0.7}, {6, 0.6}};
    for (const auto& [index, eps] : cases)
    {
        const TransformedField img = transform_solution(burgers_generator(index), eps, shock, shock.nu);
        for (double x : {-0.4, 0.1, 0.6})
            EXPECT_NEAR(burgers_residual(img.field, img.nu, x, 0.5), 0.0, 1e-6) << "L" << index;
    }
}

TEST(Solutions, FrameChangeShiftsValuesAndOrigin)
{
    const Grid1D g = Grid1D::uniform(0.0, 1.0, 8, Boundary::Periodic);
    const State s = State::sample(g, [](double x, double) { return x; }, 2.0);
    const State b = frame_change(s, 0.5);
    for (std::size_t i = 0; i < 8; ++i)
    {
        EXPECT_DOUBLE_EQ(b.values[i], s.values[i] + 0.5);
        EXPECT_DOUBLE_EQ(b.grid.x(i), s.grid.x(i) + 1.0);
    }
    EXPECT_EQ(b.time, s.time);
}
