#include "burgers/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "burgers/errors.hpp"

namespace burgers
{

Grid1D::Grid1D(double x_min, double h, std::size_t n_points, Boundary boundary,
               double origin_offset)
    : x_min_(x_min), h_(h), n_(n_points), boundary_(boundary), origin_offset_(origin_offset)
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidParameter("grid spacing must be positive and finite");
    if (n_points < min_points)
        throw InvalidParameter("grid needs at least " + std::to_string(min_points) + " points");
}

Grid1D Grid1D::uniform(double x_min, double length, std::size_t n_points, Boundary boundary)
{
    if (n_points == 0)
        throw InvalidParameter("grid needs at least " + std::to_string(min_points) + " points");
    return Grid1D(x_min, length / static_cast<double>(n_points), n_points, boundary);
}

Grid1D Grid1D::with_boundary_data(ScalarField data) const
{
    Grid1D g = *this;
    g.boundary_data_ = std::move(data);
    return g;
}

Grid1D Grid1D::with_origin_offset(double offset) const
{
    Grid1D g = *this;
    g.origin_offset_ = offset;
    return g;
}

State State::sample(const Grid1D& grid, const ScalarField& field, double time)
{
    State s{std::vector<double>(grid.size()), time, grid};
    for (std::size_t i = 0; i < grid.size(); ++i)
        s.values[i] = field(grid.x(static_cast<std::ptrdiff_t>(i)), time);
    return s;
}

double SchemeParams::re_h() const
{
    if (!(nu > 0.0))
        throw InvalidParameter("cell Reynolds number is undefined for nu = 0");
    return ref_velocity * h / nu;
}

//---------------------------------------------------------------------------//

Padded::Padded(std::size_t n, int pad)
    : data_(n + 2 * static_cast<std::size_t>(pad), 0.0), n_(n), pad_(pad)
{
}

std::vector<double> Padded::interior() const
{
    auto first = data_.begin() + pad_;
    return {first, first + static_cast<std::ptrdiff_t>(n_)};
}

Padded pad(std::span<const double> values, const Grid1D& grid, double t, int width)
{
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    if (static_cast<std::size_t>(n) != grid.size())
        throw InvalidParameter("value array does not match the grid size");
    if (width < 0 || width > n)
        throw InvalidParameter("ghost width out of range");

    Padded p(values.size(), width);
    for (std::ptrdiff_t i = 0; i < n; ++i)
        p[i] = values[static_cast<std::size_t>(i)];
    if (width == 0)
        return p;

    if (grid.boundary() == Boundary::Periodic)
    {
        for (std::ptrdiff_t g = 1; g <= width; ++g)
        {
            p[-g] = values[static_cast<std::size_t>(n - g)];
            p[n - 1 + g] = values[static_cast<std::size_t>(g - 1)];
        }
        return p;
    }

    if (!grid.has_boundary_data())
        throw BoundaryDataMissing("stencil exceeds a DirichletExact boundary with no boundary data");
    const auto& data = grid.boundary_data();
    for (std::ptrdiff_t g = 1; g <= width; ++g)
    {
        p[-g] = data(grid.x(-g), t);
        p[n - 1 + g] = data(grid.x(n - 1 + g), t);
    }
    return p;
}

Padded pad(const State& state, int width)
{
    return pad(state.values, state.grid, state.time, width);
}

namespace
{
template <class Kernel>
std::vector<double> map_nodes(const State& state, int width, Kernel&& kernel)
{
    const Padded u = pad(state, width);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const auto c = static_cast<std::ptrdiff_t>(i);
        out[i] = kernel([&](std::ptrdiff_t k) { return u[c + k]; });
    }
    return out;
}
}  // namespace

std::vector<double> shift(const State& state, double alpha)
{
    const double twice = 2.0 * alpha;
    if (std::abs(twice - std::round(twice)) > 0.0)
        throw InvalidParameter("shift must be a multiple of 1/2");
    const auto k2 = static_cast<long>(std::lround(twice));
    const long whole = (k2 >= 0 ? k2 : k2 - 1) / 2;  // floor(alpha)
    const bool half = (k2 % 2) != 0;
    const int width = static_cast<int>(std::abs(whole) + (half ? 1 : 0));

    return map_nodes(state, width, [&](auto u) {
        if (!half)
            return u(whole);
        // E^{k+1/2} u_i = (u_{i+k} + u_{i+k+1}) / 2
        return (u(whole) + u(whole + 1)) / 2.0;
    });
}

std::vector<double> delta(const State& state)
{
    return map_nodes(state, 1, [](auto u) { return u(1) - u(0); });
}

std::vector<double> mu(const State& state)
{
    return map_nodes(state, 1, [](auto u) { return (u(0) + u(1)) / 2.0; });
}

std::vector<double> delta_plus(const State& state)
{
    return map_nodes(state, 1, [](auto u) { return u(1) - u(0); });
}

std::vector<double> delta_minus(const State& state)
{
    return map_nodes(state, 1, [](auto u) { return u(0) - u(-1); });
}

std::vector<double> delta_pow(const State& state, int k)
{
    switch (k)
    {
    case 2:
        return map_nodes(state, 1, [](auto u) { return stencil::delta2<double>(u); });
    case 3:
        // staggered: value at i + 1/2
        return map_nodes(state, 2,
                         [](auto u) { return u(2) - 3.0 * u(1) + 3.0 * u(0) - u(-1); });
    case 4:
        return map_nodes(state, 2, [](auto u) { return stencil::delta4<double>(u); });
    default:
        throw InvalidParameter("delta_pow supports k = 2, 3, 4");
    }
}

std::vector<double> mu_delta(const State& state)
{
    return map_nodes(state, 1, [](auto u) { return stencil::mu_delta<double>(u); });
}

std::vector<double> mu_delta3(const State& state)
{
    return map_nodes(state, 2, [](auto u) { return stencil::mu_delta3<double>(u); });
}

double l2_error(const State& state, const ScalarField& exact)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < state.values.size(); ++i)
    {
        const double d = state.values[i] - exact(state.grid.x(static_cast<std::ptrdiff_t>(i)), state.time);
        sum += d * d;
    }
    return std::sqrt(state.grid.h() * sum);
}

//---------------------------------------------------------------------------//

HighPrecision apply_operator(FdOperator op, const HpFunction& f, const HighPrecision& x0,
                             const HighPrecision& h)
{
    auto u = [&](int k) { return f(x0 + HighPrecision(k) * h); };
    using T = HighPrecision;
    switch (op)
    {
    case FdOperator::MuDelta:
        return stencil::mu_delta<T>(u) / h;
    case FdOperator::Delta2:
        return stencil::delta2<T>(u) / (h * h);
    case FdOperator::MuDeltaFourth:
        return (stencil::mu_delta<T>(u) - stencil::mu_delta3<T>(u) / T(6)) / h;
    case FdOperator::Delta2Fourth:
        return (stencil::delta2<T>(u) - stencil::delta4<T>(u) / T(12)) / (h * h);
    }
    throw InvalidParameter("unknown operator");
}

double operator_accuracy_check(FdOperator op, const HpFunction& f, const HpFunction& derivative,
                               double x0, std::span<const double> h_sequence)
{
    if (h_sequence.size() < 3)
        throw InvalidParameter("need at least three mesh sizes");
    for (std::size_t i = 1; i < h_sequence.size(); ++i)
        if (!(h_sequence[i] < h_sequence[i - 1]))
            throw InvalidParameter("mesh sizes must be strictly decreasing");

    const HighPrecision x(x0);
    const HighPrecision exact = derivative(x);
    std::vector<double> errors;
    errors.reserve(h_sequence.size());
    for (double h : h_sequence)
    {
        const HighPrecision approx = apply_operator(op, f, x, HighPrecision(h));
        const double err = static_cast<double>(boost::multiprecision::abs(approx - exact));
        if (err < 100.0 * std::numeric_limits<double>::epsilon())
            throw DegenerateSample("error at h = " + std::to_string(h) + " is at round-off level");
        errors.push_back(err);
    }
    return log_log_slope(h_sequence, errors);
}

double log_log_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidParameter("slope fit needs two or more paired samples");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace burgers
