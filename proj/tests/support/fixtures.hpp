#pragma once

// Hand-derived prolongation coefficients sigma^{(j,k)} of three Burgers
// generators, written from the characteristic form Q = eta - xi1 u_x - xi2 u_t
// with sigma^J = D^J Q + xi1 u_{J+x} + xi2 u_{J+t}.

#include <map>
#include <utility>

#include "burgers/jet.hpp"

namespace fixture
{

using Sigma = std::map<std::pair<int, int>, double>;

/// L3 = x d/dx + 2t d/dt - u d/du: sigma^{(j,k)} = -(1 + j + 2k) u_{(j,k)}.
inline Sigma dilatation(const burgers::JetPoint& p, int order)
{
    Sigma s;
    for (int o = 1; o <= order; ++o)
        for (int k = 0; k <= o; ++k)
            s[{o - k, k}] = -(1.0 + (o - k) + 2.0 * k) * p.u(o - k, k);
    return s;
}

/// L5 = t d/dx + d/du: sigma^{(j,k)} = -k u_{(j+1,k-1)}.
inline Sigma galilean(const burgers::JetPoint& p, int order)
{
    Sigma s;
    for (int o = 1; o <= order; ++o)
        for (int k = 0; k <= o; ++k)
            s[{o - k, k}] = k == 0 ? 0.0 : -k * p.u(o - k + 1, k - 1);
    return s;
}

/// L4 = xt d/dx + t^2 d/dt + (x - ut) d/du, up to second order plus u_xxx.
inline Sigma projective(const burgers::JetPoint& p)
{
    const double x = p.x, t = p.t;
    auto u = [&](int j, int k) { return p.u(j, k); };
    return {
        {{1, 0}, 1.0 - 2.0 * t * u(1, 0)},
        {{0, 1}, -u(0, 0) - x * u(1, 0) - 3.0 * t * u(0, 1)},
        {{2, 0}, -3.0 * t * u(2, 0)},
        {{3, 0}, -4.0 * t * u(3, 0)},
        {{1, 1}, -2.0 * u(1, 0) - x * u(2, 0) - 4.0 * t * u(1, 1)},
        {{0, 2}, -4.0 * u(0, 1) - 2.0 * x * u(1, 1) - 5.0 * t * u(0, 2)},
    };
}

}  // namespace fixture
