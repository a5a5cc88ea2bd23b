#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/tridiagonal.hpp"

using namespace burgers;

namespace
{
// Dense product A x for the constant-band operator, optionally cyclic.
std::vector<double> apply(const TridiagonalCoeffs& a, const std::vector<double>& x, bool cyclic)
{
    const std::size_t n = x.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        y[i] = a.diag * x[i];
        if (i > 0)
            y[i] += a.lower * x[i - 1];
        else if (cyclic)
            y[i] += a.lower * x[n - 1];
        if (i + 1 < n)
            y[i] += a.upper * x[i + 1];
        else if (cyclic)
            y[i] += a.upper * x[0];
    }
    return y;
}
}  // namespace

TEST(Tridiagonal, RecoversKnownSolution)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const TridiagonalCoeffs a{-0.4, 1.8, -0.35};
    for (std::size_t n : {2u, 3u, 17u, 64u})
    {
        std::vector<double> x(n), out(n);
        for (double& v : x)
            v = d(rng);
        solve_tridiagonal(a, apply(a, x, false), out);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(out[i], x[i], 1e-14);
    }
}

TEST(Tridiagonal, CyclicRecoversKnownSolution)
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const TridiagonalCoeffs a{-0.5, 2.0, -0.5};
    for (std::size_t n : {3u, 8u, 33u, 128u})
    {
        std::vector<double> x(n), out(n);
        for (double& v : x)
            v = d(rng);
        solve_cyclic_tridiagonal(a, apply(a, x, true), out);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(out[i], x[i], 1e-13);
    }
}

TEST(Tridiagonal, SizeChecks)
{
    std::vector<double> r(2), x(3);
    EXPECT_THROW(solve_tridiagonal({-1, 3, -1}, r, x), InvalidParameter);
    std::vector<double> r2(2), x2(2);
    EXPECT_THROW(solve_cyclic_tridiagonal({-1, 3, -1}, r2, x2), InvalidParameter);
}
