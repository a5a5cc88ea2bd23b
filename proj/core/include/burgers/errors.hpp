#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgers
{

/// Raised when a stencil reaches past a DirichletExact boundary and the grid
/// carries no boundary data to fill the ghost values.
class BoundaryDataMissing : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A convergence sample whose error is at round-off level, so the fitted
/// slope would be meaningless.
class DegenerateSample : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Point outside the validity domain of a finite transformation
/// (e.g. 1 - eps*t = 0 for the projective map).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

class InsufficientJetOrder : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class BlowUp : public std::runtime_error
{
  public:
    BlowUp(std::size_t step, std::size_t index)
        : std::runtime_error("non-finite value at node " + std::to_string(index)
                             + " after step " + std::to_string(step)),
          step_(step), index_(index)
    {
    }

    /// Number of steps completed before the failing one.
    std::size_t step() const noexcept { return step_; }
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t step_;
    std::size_t index_;
};

class ConvergenceFailure : public std::runtime_error
{
  public:
    ConvergenceFailure(std::size_t iterations, double last_change)
        : std::runtime_error("Picard iteration did not converge after "
                             + std::to_string(iterations) + " iterations (last change "
                             + std::to_string(last_change) + ")"),
          last_change_(last_change)
    {
    }

    double last_change() const noexcept { return last_change_; }

  private:
    double last_change_;
};

class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line)
    {
    }

    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace burgers
