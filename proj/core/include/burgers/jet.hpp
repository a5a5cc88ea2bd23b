#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace burgers
{

/// Forward-mode dual number: value plus one directional derivative.
struct Dual
{
    double v = 0.0;
    double d = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

    Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator/(const Dual& a, const Dual& b)
{
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

/// Truncated bivariate Taylor series in (s_x, s_t) with dual coefficients.
///
/// Evaluating a jet expression on the series of u around a jet point turns
/// total derivatives into plain series differentiation: the coefficient of
/// s_x^j s_t^k is D_x^j D_t^k f / (j! k!). The support is a staircase:
/// level k (power of s_t) holds x-powers 0..x_order(k), non-increasing in k.
class Series
{
  public:
    Series() = default;
    /// Zero series with the given staircase (normalised to be non-increasing).
    explicit Series(std::vector<int> x_orders);

    static Series constant(const Dual& c, const std::vector<int>& x_orders);

    int levels() const noexcept { return static_cast<int>(c_.size()); }
    int x_order(int level) const noexcept { return static_cast<int>(c_[level].size()) - 1; }
    std::vector<int> shape() const;
    bool has(int j, int k) const noexcept
    {
        return k >= 0 && k < levels() && j >= 0 && j <= x_order(k);
    }
    bool empty() const noexcept { return c_.empty(); }

    /// Normalised coefficient of s_x^j s_t^k.
    Dual& coeff(int j, int k) { return c_[k][j]; }
    const Dual& coeff(int j, int k) const { return c_[k][j]; }

    /// Derivative d^{j+k}/dx^j dt^k at the expansion point (un-normalised).
    Dual derivative(int j, int k) const;

    /// Constant term; throws InsufficientJetOrder on an empty series.
    Dual value() const;
    double real() const { return value().v; }

    Series dx() const;
    Series dt() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Dual& s);

    friend Series operator*(const Series& a, const Series& b);

  private:
    std::vector<std::vector<Dual>> c_;  // c_[k][j]
};

inline Series operator+(Series a, const Series& b) { return a += b; }
inline Series operator-(Series a, const Series& b) { return a -= b; }
inline Series operator*(Series a, const Dual& s) { return a *= s; }
inline Series operator*(const Dual& s, Series a) { return a *= s; }
inline Series operator*(Series a, double s) { return a *= Dual(s); }
inline Series operator*(double s, Series a) { return a *= Dual(s); }
inline Series operator-(const Series& a) { return a * -1.0; }
Series operator+(Series a, const Dual& s);
inline Series operator+(const Dual& s, Series a) { return std::move(a) + s; }
inline Series operator-(Series a, const Dual& s) { return std::move(a) + (-s); }
inline Series operator-(const Dual& s, const Series& a) { return -a + s; }
Series abs(const Series& a);
Series dx(const Series& a, int times = 1);

enum class Direction
{
    X,
    T,
};

/// A point of jet space: (x, t, u and its partial derivatives) plus optional
/// step-size and viscosity coordinates. Derivatives are keyed by (j, k) =
/// (x-order, t-order), so permuted multi-indices share one slot.
class JetPoint
{
  public:
    JetPoint() = default;
    /// Zero jet whose level k carries x-orders 0..x_orders[k].
    explicit JetPoint(std::vector<int> x_orders);

    double x = 0.0;
    double t = 0.0;
    std::optional<double> h;
    std::optional<double> tau;
    std::optional<double> nu;

    bool has(int j, int k) const noexcept { return series_.has(j, k); }
    double u(int j, int k) const;
    void set_u(int j, int k, double value);
    std::vector<int> shape() const { return series_.shape(); }

    /// Taylor series of u around the point (dual parts zero).
    const Series& series() const noexcept { return series_; }

    static JetPoint from_series(const Series& u, double x, double t);

  private:
    Series series_;
};

/// Jet coordinates as series, handed to jet expressions.
struct JetContext
{
    Series x;  ///< x + s_x
    Series t;  ///< t + s_t
    Series u;
    std::optional<Dual> h_coord;
    std::optional<Dual> tau_coord;
    std::optional<Dual> nu_coord;

    Dual h() const;
    Dual tau() const;
    Dual nu() const;

    static JetContext from_jet(const JetPoint& jet);
};

/// A function on jet space, evaluated as a series so it can be totally
/// differentiated.
using JetExpr = std::function<Series(const JetContext&)>;

/// D_x or D_t of expr at the jet. Throws InsufficientJetOrder if the jet does
/// not carry the coordinates one order above what expr consumes.
double total_derivative(const JetExpr& expr, const JetPoint& jet, Direction direction);

/// Evolution equation u_t = rhs(x, t, u, u_x, ..., h, tau, nu), where rhs
/// involves x-derivatives only, up to order `x_order`. Its jet-space form is
/// F = u_t - rhs.
struct EvolutionEquation
{
    std::string name;
    JetExpr rhs;
    int x_order = 2;

    Series lhs(const JetContext& ctx) const { return ctx.u.dt() - rhs(ctx); }
};

/// Complete a jet whose free coordinates u_{j,0} (j = 0..N) are set so that it
/// lies on the solution manifold of `eq`: every u_{j,k} with k >= 1 is the
/// corresponding total derivative of rhs. Produces up to `t_levels` extra
/// levels (fewer if the x-order runs out).
JetPoint constrain_to_equation(const EvolutionEquation& eq, const JetPoint& free_jet,
                               int t_levels);

}  // namespace burgers
