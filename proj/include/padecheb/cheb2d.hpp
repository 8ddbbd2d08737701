#pragma once

#include <cstddef>
#include <functional>

#include "padecheb/cheb_core.hpp"
#include "padecheb/dense_linalg.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

using Sampler2D = std::function<double(double, double)>;

/// A pair of sizes, one per axis (degrees, node counts, or cell counts).
struct Extent2D {
    std::size_t x = 0;
    std::size_t y = 0;

    friend bool operator==(const Extent2D &, const Extent2D &) = default;
};

/// Bivariate series Σ_i Σ_j c_{i,j} T_i(t_x) T_j(t_y). The ε factors (1, 2, 4) are
/// already inside the coefficients, so evaluation sums plainly without halving.
/// coeffs(i, j) is (d_x+1) × (d_y+1).
struct ChebyshevSeries2D {
    DenseMatrix coeffs;
    Rect rect{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
    Extent2D n_quad;

    Extent2D degree() const noexcept { return {coeffs.rows() - 1, coeffs.cols() - 1}; }
};

/// Tensor Gauss-Chebyshev quadrature:
/// c_{i,j} = ε_{i,j}/(n_x n_y) Σ Σ f(G_x(t_lx), G_y(t_ly)) T_i(t_lx) T_j(t_ly).
ChebyshevSeries2D cheb_coeffs_2d(const Sampler2D &f, const Rect &rect, Extent2D degree, Extent2D n);

ChebyshevSeries2D cheb_coeffs_2d(const Sampler2D &f, const Rect &rect, Extent2D degree,
                                 const ChebyshevQuadrature &rule_x, const ChebyshevQuadrature &rule_y);

/// Plain double sum of a coefficient matrix at reference coordinates.
double eval_cheb_plain_2d(const DenseMatrix &coeffs, double tx, double ty);

/// Series value at (x, y) in series.rect. Throws OutOfDomain outside it.
double eval_cheb_series_2d(const ChebyshevSeries2D &series, double x, double y);

} // namespace padecheb
