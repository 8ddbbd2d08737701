#include "padecheb/cheb_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "padecheb/diagnostics.hpp"
#include "padecheb/errors.hpp"

namespace padecheb {

Interval::Interval(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
        std::ostringstream msg;
        msg << "interval requires finite a < b, got [" << a << ", " << b << "]";
        throw InvalidArgument(msg.str());
    }
}

std::vector<double> cheb_points(std::size_t n) {
    if (n == 0)
        throw InvalidArgument("cheb_points: n must be at least 1");
    std::vector<double> t(n);
    const double dn = static_cast<double>(n);
    for (std::size_t l = 0; l < n; ++l)
        t[l] = std::cos((static_cast<double>(l) + 0.5) * std::numbers::pi / dn);
    // cos(π/2) is 6e-17 in floating point; the middle node of an odd rule is exactly 0.
    if (n % 2 == 1)
        t[n / 2] = 0.0;
    return t;
}

double affine_to_domain(const Interval &interval, double t) noexcept {
    return interval.a() + interval.length() * (t + 1.0) * 0.5;
}

double affine_to_reference(const Interval &interval, double x) noexcept {
    return 2.0 * (x - interval.a()) / interval.length() - 1.0;
}

ChebyshevQuadrature::ChebyshevQuadrature(std::size_t n, std::size_t max_degree)
    : nodes_(cheb_points(n)), max_degree_(max_degree), table_(n * (max_degree + 1)) {
    const std::size_t stride = max_degree_ + 1;
    for (std::size_t l = 0; l < n; ++l) {
        const double t = nodes_[l];
        double *row = table_.data() + l * stride;
        row[0] = 1.0;
        if (max_degree_ >= 1)
            row[1] = t;
        for (std::size_t k = 2; k <= max_degree_; ++k)
            row[k] = 2.0 * t * row[k - 1] - row[k - 2];
    }
}

ChebyshevSeries1D cheb_coeffs_1d(const Sampler1D &f, const Interval &interval, std::size_t degree,
                                 std::size_t n) {
    return cheb_coeffs_1d(f, interval, degree, ChebyshevQuadrature(n, degree));
}

ChebyshevSeries1D cheb_coeffs_1d(const Sampler1D &f, const Interval &interval, std::size_t degree,
                                 const ChebyshevQuadrature &rule) {
    if (rule.max_degree() < degree)
        throw InvalidArgument("cheb_coeffs_1d: quadrature table does not reach the requested degree");
    const std::size_t n = rule.size();
    if (n < degree + 1) {
        std::ostringstream msg;
        msg << "quadrature with " << n << " nodes cannot resolve degree " << degree;
        warn(msg.str());
    }

    std::vector<double> coeffs(degree + 1, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        const double x = affine_to_domain(interval, rule.nodes()[l]);
        const double fx = f(x);
        if (!std::isfinite(fx))
            throw SamplingError(x, fx);
        for (std::size_t k = 0; k <= degree; ++k)
            coeffs[k] += fx * rule.basis(l, k);
    }
    const double scale = 2.0 / static_cast<double>(n);
    for (double &c : coeffs)
        c *= scale;
    return {std::move(coeffs), interval, n};
}

namespace {

/// Clenshaw recurrence; returns (b1, b2) so callers can finish with or without halving c0.
std::pair<double, double> clenshaw_tail(std::span<const double> coeffs, double t) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
        const double b0 = coeffs[k] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return {b1, b2};
}

} // namespace

double eval_cheb_plain(std::span<const double> coeffs, double t) {
    if (coeffs.empty())
        throw InvalidArgument("eval_cheb_plain: empty coefficient vector");
    const auto [b1, b2] = clenshaw_tail(coeffs, t);
    return coeffs[0] + t * b1 - b2;
}

double eval_cheb_series(const ChebyshevSeries1D &series, double x) {
    if (!series.interval.contains(x)) {
        std::ostringstream msg;
        msg << "x = " << x << " outside [" << series.interval.a() << ", " << series.interval.b() << "]";
        throw OutOfDomain(msg.str());
    }
    if (series.coeffs.empty())
        throw InvalidArgument("eval_cheb_series: empty coefficient vector");
    const double t = affine_to_reference(series.interval, x);
    const auto [b1, b2] = clenshaw_tail(series.coeffs, t);
    return 0.5 * series.coeffs[0] + t * b1 - b2;
}

SamplingError::SamplingError(double x, double value)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "non-finite sample f(" << x << ") = " << value;
          return msg.str();
      }()),
      x_(x) {}

SamplingError::SamplingError(double x, double y, double value)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "non-finite sample f(" << x << ", " << y << ") = " << value;
          return msg.str();
      }()),
      x_(x), y_(y), bivariate_(true) {}

CellBuildError::CellBuildError(std::size_t cell, const std::string &what)
    : std::runtime_error("cell " + std::to_string(cell) + ": " + what), cell_(cell) {}

} // namespace padecheb
