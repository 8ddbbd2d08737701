#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padecheb {

/// Bad argument shapes, orders, or sizes.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the approximant's domain.
class OutOfDomain : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A sampled function returned a non-finite value.
class SamplingError : public std::runtime_error {
  public:
    SamplingError(double x, double value);
    SamplingError(double x, double y, double value);

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    bool bivariate() const noexcept { return bivariate_; }

  private:
    double x_ = 0.0;
    double y_ = 0.0;
    bool bivariate_ = false;
};

/// The denominator system has full column rank, so no kernel vector exists.
class NoKernel : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A piecewise build left at least one cell without an approximant.
class CellBuildError : public std::runtime_error {
  public:
    CellBuildError(std::size_t cell, const std::string &what);
    std::size_t cell() const noexcept { return cell_; }

  private:
    std::size_t cell_;
};

} // namespace padecheb
