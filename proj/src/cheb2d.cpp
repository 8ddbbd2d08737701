#include "padecheb/cheb2d.hpp"

#include <cmath>
#include <sstream>

#include "padecheb/diagnostics.hpp"
#include "padecheb/errors.hpp"

namespace padecheb {

ChebyshevSeries2D cheb_coeffs_2d(const Sampler2D &f, const Rect &rect, Extent2D degree, Extent2D n) {
    return cheb_coeffs_2d(f, rect, degree, ChebyshevQuadrature(n.x, degree.x), ChebyshevQuadrature(n.y, degree.y));
}

ChebyshevSeries2D cheb_coeffs_2d(const Sampler2D &f, const Rect &rect, Extent2D degree,
                                 const ChebyshevQuadrature &rule_x, const ChebyshevQuadrature &rule_y) {
    if (rule_x.max_degree() < degree.x || rule_y.max_degree() < degree.y)
        throw InvalidArgument("cheb_coeffs_2d: quadrature tables do not reach the requested degree");
    const std::size_t nx = rule_x.size();
    const std::size_t ny = rule_y.size();
    if (nx < degree.x + 1 || ny < degree.y + 1) {
        std::ostringstream msg;
        msg << "quadrature with " << nx << "x" << ny << " nodes cannot resolve degree " << degree.x << "x"
            << degree.y;
        warn(msg.str());
    }

    std::vector<double> ys(ny);
    for (std::size_t ly = 0; ly < ny; ++ly)
        ys[ly] = affine_to_domain(rect.y, rule_y.nodes()[ly]);

    // Contract over y first: g(lx, j) = Σ_ly f(x_lx, y_ly) T_j(t_ly), then over x.
    DenseMatrix g(nx, degree.y + 1);
    for (std::size_t lx = 0; lx < nx; ++lx) {
        const double x = affine_to_domain(rect.x, rule_x.nodes()[lx]);
        for (std::size_t ly = 0; ly < ny; ++ly) {
            const double fxy = f(x, ys[ly]);
            if (!std::isfinite(fxy))
                throw SamplingError(x, ys[ly], fxy);
            for (std::size_t j = 0; j <= degree.y; ++j)
                g(lx, j) += fxy * rule_y.basis(ly, j);
        }
    }

    DenseMatrix c(degree.x + 1, degree.y + 1);
    for (std::size_t lx = 0; lx < nx; ++lx)
        for (std::size_t i = 0; i <= degree.x; ++i) {
            const double ti = rule_x.basis(lx, i);
            for (std::size_t j = 0; j <= degree.y; ++j)
                c(i, j) += ti * g(lx, j);
        }

    const double base = 1.0 / (static_cast<double>(nx) * static_cast<double>(ny));
    for (std::size_t i = 0; i <= degree.x; ++i)
        for (std::size_t j = 0; j <= degree.y; ++j) {
            const double eps = (i == 0 ? 1.0 : 2.0) * (j == 0 ? 1.0 : 2.0);
            c(i, j) *= eps * base;
        }
    return {std::move(c), rect, {nx, ny}};
}

double eval_cheb_plain_2d(const DenseMatrix &coeffs, double tx, double ty) {
    if (coeffs.rows() == 0 || coeffs.cols() == 0)
        throw InvalidArgument("eval_cheb_plain_2d: empty coefficient matrix");
    // Clenshaw along x over row sums evaluated by Clenshaw along y.
    std::vector<double> rows(coeffs.rows());
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
        rows[i] = eval_cheb_plain(coeffs.row(i), ty);
    return eval_cheb_plain(rows, tx);
}

double eval_cheb_series_2d(const ChebyshevSeries2D &series, double x, double y) {
    if (!series.rect.contains(x, y)) {
        std::ostringstream msg;
        msg << "(" << x << ", " << y << ") outside the series rectangle";
        throw OutOfDomain(msg.str());
    }
    return eval_cheb_plain_2d(series.coeffs, affine_to_reference(series.rect.x, x),
                              affine_to_reference(series.rect.y, y));
}

} // namespace padecheb
