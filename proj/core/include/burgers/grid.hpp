#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace burgers
{

/// u(x, t) for closed-form solutions and boundary data.
using ScalarField = std::function<double(double x, double t)>;

enum class Boundary
{
    Periodic,
    DirichletExact,
};

/// Uniform 1-D mesh. Node i sits at x_min + origin_offset + i*h.
///
/// Periodic grids wrap with period n_points*h. DirichletExact grids take
/// every value outside [0, n_points) from the registered boundary data.
class Grid1D
{
  public:
    static constexpr std::size_t min_points = 5;

    Grid1D(double x_min, double h, std::size_t n_points, Boundary boundary,
           double origin_offset = 0.0);

    /// n_points nodes covering [x_min, x_min + length) with h = length/n_points.
    static Grid1D uniform(double x_min, double length, std::size_t n_points, Boundary boundary);

    double x(std::ptrdiff_t i) const noexcept
    {
        return x_min_ + origin_offset_ + static_cast<double>(i) * h_;
    }
    double h() const noexcept { return h_; }
    double x_min() const noexcept { return x_min_; }
    double origin_offset() const noexcept { return origin_offset_; }
    double length() const noexcept { return h_ * static_cast<double>(n_); }
    std::size_t size() const noexcept { return n_; }
    Boundary boundary() const noexcept { return boundary_; }

    const ScalarField& boundary_data() const noexcept { return boundary_data_; }
    bool has_boundary_data() const noexcept { return static_cast<bool>(boundary_data_); }

    Grid1D with_boundary_data(ScalarField data) const;
    Grid1D with_origin_offset(double offset) const;

  private:
    double x_min_;
    double h_;
    std::size_t n_;
    Boundary boundary_;
    double origin_offset_;
    ScalarField boundary_data_;
};

/// Grid function at one time level.
struct State
{
    std::vector<double> values;
    double time = 0.0;
    Grid1D grid;

    static State sample(const Grid1D& grid, const ScalarField& field, double time);
};

struct SchemeParams
{
    double nu = 0.0;
    double h = 0.0;
    double tau = 0.0;
    double ref_velocity = 0.0;

    double cfl() const noexcept { return ref_velocity * tau / h; }
    double s() const noexcept { return nu * tau / (h * h); }
    double s_star() const noexcept { return (nu + ref_velocity * h * cfl() / 2.0) * tau / (h * h); }
    /// Cell Reynolds number a*h/nu; throws InvalidParameter when nu == 0.
    double re_h() const;
};

//---------------------------------------------------------------------------//
// Padded arrays: interior values plus `pad` ghost cells on each side.
//---------------------------------------------------------------------------//

class Padded
{
  public:
    Padded() = default;
    Padded(std::size_t n, int pad);

    double& operator[](std::ptrdiff_t i) noexcept { return data_[static_cast<std::size_t>(i + pad_)]; }
    double operator[](std::ptrdiff_t i) const noexcept
    {
        return data_[static_cast<std::size_t>(i + pad_)];
    }

    std::size_t size() const noexcept { return n_; }
    int pad() const noexcept { return pad_; }
    std::vector<double> interior() const;

  private:
    std::vector<double> data_;
    std::size_t n_ = 0;
    int pad_ = 0;
};

/// Copy `values` into a padded array and fill `width` ghosts per side from the
/// grid's boundary policy, evaluated at time t.
Padded pad(std::span<const double> values, const Grid1D& grid, double t, int width);
Padded pad(const State& state, int width);

//---------------------------------------------------------------------------//
// Undivided Hildebrand operators. Staggered results (delta, mu, delta_pow with
// odd k, shift by a half) are indexed so that entry i is the value at i + 1/2
// (or i - 1/2 for negative half shifts). Half-node values of u are two-point
// means.
//---------------------------------------------------------------------------//

namespace stencil
{
// `u(k)` returns the sample at offset k from the evaluation node.
template <class T, class U>
T mu_delta(U&& u)
{
    return (u(1) - u(-1)) / T(2);
}
template <class T, class U>
T delta2(U&& u)
{
    return u(1) - T(2) * u(0) + u(-1);
}
template <class T, class U>
T mu_delta3(U&& u)
{
    return (u(2) - T(2) * u(1) + T(2) * u(-1) - u(-2)) / T(2);
}
template <class T, class U>
T delta4(U&& u)
{
    return u(2) - T(4) * u(1) + T(6) * u(0) - T(4) * u(-1) + u(-2);
}
}  // namespace stencil

std::vector<double> shift(const State& state, double alpha);
std::vector<double> delta(const State& state);
std::vector<double> mu(const State& state);
std::vector<double> delta_plus(const State& state);
std::vector<double> delta_minus(const State& state);
std::vector<double> delta_pow(const State& state, int k);
std::vector<double> mu_delta(const State& state);
std::vector<double> mu_delta3(const State& state);

/// L2 grid norm sqrt(h * sum (u_i - exact(x_i, t))^2).
double l2_error(const State& state, const ScalarField& exact);

//---------------------------------------------------------------------------//
// Operator accuracy studies (run in extended precision so round-off does not
// mask fourth-order truncation at small h).
//---------------------------------------------------------------------------//

using HighPrecision = boost::multiprecision::cpp_bin_float_quad;
using HpFunction = std::function<HighPrecision(const HighPrecision&)>;

enum class FdOperator
{
    MuDelta,           ///< mu delta / h            ~ u_x,  O(h^2)
    Delta2,            ///< delta^2 / h^2          ~ u_xx, O(h^2)
    MuDeltaFourth,     ///< (mu delta - mu delta^3/6) / h      ~ u_x,  O(h^4)
    Delta2Fourth,      ///< (delta^2 - delta^4/12) / h^2       ~ u_xx, O(h^4)
};

HighPrecision apply_operator(FdOperator op, const HpFunction& f, const HighPrecision& x0,
                             const HighPrecision& h);

/// Least-squares slope of log(error) against log(h). `derivative` is the exact
/// derivative matching the operator (first or second). Throws DegenerateSample
/// when any error is below 100 machine epsilon.
double operator_accuracy_check(FdOperator op, const HpFunction& f, const HpFunction& derivative,
                               double x0, std::span<const double> h_sequence);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace burgers
