#include "padecheb/pade2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "linearization.hpp"
#include "padecheb/errors.hpp"

namespace padecheb {

PadeOrder2D::PadeOrder2D(Extent2D np, Extent2D nq) : np_(np), nq_(nq) {
    if (!(np.x >= nq.x && nq.x >= 1 && np.y >= nq.y && nq.y >= 1)) {
        std::ostringstream msg;
        msg << "bivariate Padé order requires np_i >= nq_i >= 1, got np = (" << np.x << ", " << np.y
            << "), nq = (" << nq.x << ", " << nq.y << ")";
        throw InvalidArgument(msg.str());
    }
}

DenseMatrix assemble_denominator_system_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order) {
    const Extent2D need = order.series_degree();
    const DenseMatrix &c = series.coeffs;
    if (c.rows() < need.x + 1 || c.cols() < need.y + 1) {
        std::ostringstream msg;
        msg << "bivariate denominator system needs coefficients up to (" << need.x << ", " << need.y
            << "), got (" << c.rows() - 1 << ", " << c.cols() - 1 << ")";
        throw InvalidArgument(msg.str());
    }
    const Extent2D np = order.np();
    const Extent2D nq = order.nq();
    auto coeff = [&](std::ptrdiff_t a, std::ptrdiff_t b) {
        return (a < 0 || b < 0) ? 0.0 : c(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    };

    const std::size_t unknowns = order.denominator_unknowns();
    DenseMatrix a(unknowns - 1, unknowns);
    std::size_t row = 0;
    for (std::size_t di = 0; di <= nq.x; ++di)
        for (std::size_t dj = 0; dj <= nq.y; ++dj) {
            if (row == unknowns - 1)
                break; // the corner (np1+nq1+1, np2+nq2+1) is not an equation
            const auto i = static_cast<std::ptrdiff_t>(np.x + 1 + di);
            const auto j = static_cast<std::ptrdiff_t>(np.y + 1 + dj);
            for (std::size_t r = 0; r <= nq.x; ++r)
                for (std::size_t s = 0; s <= nq.y; ++s) {
                    const auto rr = static_cast<std::ptrdiff_t>(r);
                    const auto ss = static_cast<std::ptrdiff_t>(s);
                    a(row, r * (nq.y + 1) + s) =
                        coeff(i - rr, j - ss) + coeff(i - rr, j + ss) + coeff(i + rr, j - ss) + coeff(i + rr, j + ss);
                }
            ++row;
        }
    return a;
}

namespace {

DenseMatrix normalized_denominator(std::vector<double> v, const PadeOrder2D &order, double rel_tol) {
    double inf_norm = 0.0;
    for (double x : v)
        inf_norm = std::max(inf_norm, std::abs(x));
    double scale = inf_norm;
    if (std::abs(v[0]) > rel_tol * inf_norm) {
        scale = v[0];
    } else {
        const auto lead = std::find_if(v.begin(), v.end(), [&](double x) { return std::abs(x) > rel_tol * inf_norm; });
        if (lead != v.end() && *lead < 0.0)
            scale = -inf_norm;
    }
    for (double &x : v)
        x /= scale;
    const Extent2D nq = order.nq();
    return DenseMatrix(nq.x + 1, nq.y + 1, std::move(v));
}

void check_system_size(const DenseMatrix &a, const PadeOrder2D &order) {
    const std::size_t unknowns = order.denominator_unknowns();
    if (a.cols() != unknowns || a.rows() + 1 != unknowns)
        throw InvalidArgument("solve_denominator_2d: system size does not match the order");
}

} // namespace

DenseMatrix solve_denominator_2d(const DenseMatrix &a, const PadeOrder2D &order, const PadeOptions &options) {
    check_system_size(a, order);
    return normalized_denominator(choose_kernel_vector(kernel_basis(a, options.rank_tol)), order,
                                  options.normalize_rel_tol);
}

DenseMatrix assemble_residual_system_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order) {
    const Extent2D need = order.series_degree();
    const DenseMatrix &c = series.coeffs;
    if (c.rows() < need.x + 1 || c.cols() < need.y + 1) {
        std::ostringstream msg;
        msg << "bivariate residual system needs coefficients up to (" << need.x << ", " << need.y << "), got ("
            << c.rows() - 1 << ", " << c.cols() - 1 << ")";
        throw InvalidArgument(msg.str());
    }
    const Extent2D np = order.np();
    const Extent2D nq = order.nq();
    const std::size_t ni = np.x + nq.x + 2;
    const std::size_t nj = np.y + nq.y + 2;
    DenseMatrix a(ni * nj - (np.x + 1) * (np.y + 1), order.denominator_unknowns());
    std::size_t row = 0;
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < nj; ++j) {
            if (i <= np.x && j <= np.y)
                continue;
            for (std::size_t r = 0; r <= nq.x; ++r) {
                const auto tx = detail::product_terms(i, r);
                for (std::size_t s = 0; s <= nq.y; ++s) {
                    const auto ty = detail::product_terms(j, s);
                    double w = 0.0;
                    for (std::size_t u = 0; u < tx.count; ++u)
                        for (std::size_t v = 0; v < ty.count; ++v)
                            w += tx.terms[u].weight * ty.terms[v].weight * c(tx.terms[u].index, ty.terms[v].index);
                    a(row, r * (nq.y + 1) + s) = w;
                }
            }
            ++row;
        }
    return a;
}

namespace {

// Right singular vectors with singular value at most tol; never empty, the
// smallest direction stands in when m has full column rank.
std::vector<std::vector<double>> near_null(const DenseMatrix &m, double tol) {
    std::vector<std::vector<double>> basis = kernel_basis(m, tol).basis;
    if (basis.empty())
        basis.push_back(kernel_basis(m, std::numeric_limits<double>::infinity()).basis.back());
    return basis;
}

DenseMatrix as_columns(const std::vector<std::vector<double>> &vs, std::size_t rows) {
    DenseMatrix k(rows, vs.size());
    for (std::size_t col = 0; col < vs.size(); ++col)
        for (std::size_t r = 0; r < rows; ++r)
            k(r, col) = vs[col][r];
    return k;
}

} // namespace

DenseMatrix select_denominator_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order,
                                  const PadeOptions &options) {
    const DenseMatrix a = assemble_denominator_system_2d(series, order);
    if (options.rank_tol)
        return solve_denominator_2d(a, order, options);

    const double tol = options.near_kernel_rel_tol * series.coeffs.max_abs();
    const std::size_t unknowns = a.cols();
    const auto kernel = near_null(a, std::max(tol, kernel_basis(a).rank_tolerance));
    if (kernel.size() == 1)
        return normalized_denominator(kernel.front(), order, options.normalize_rel_tol);

    const DenseMatrix k = as_columns(kernel, unknowns);
    const DenseMatrix restricted = multiply(assemble_residual_system_2d(series, order), k);
    const DenseMatrix w = as_columns(near_null(restricted, tol), kernel.size());
    const DenseMatrix candidates = multiply(k, w);

    // Project e_{0,0} onto the candidate span; fall back to the least-residual direction.
    std::vector<double> q(unknowns, 0.0);
    for (std::size_t col = 0; col < candidates.cols(); ++col) {
        const double weight = candidates(0, col);
        for (std::size_t r = 0; r < unknowns; ++r)
            q[r] += weight * candidates(r, col);
    }
    double norm = 0.0;
    for (double x : q)
        norm = std::max(norm, std::abs(x));
    if (!(norm > options.normalize_rel_tol)) {
        for (std::size_t r = 0; r < unknowns; ++r)
            q[r] = candidates(r, candidates.cols() - 1);
    }
    return normalized_denominator(std::move(q), order, options.normalize_rel_tol);
}

DenseMatrix compute_numerator_2d(const ChebyshevSeries2D &series, const DenseMatrix &q, const PadeOrder2D &order) {
    const Extent2D np = order.np();
    const Extent2D nq = order.nq();
    if (q.rows() != nq.x + 1 || q.cols() != nq.y + 1)
        throw InvalidArgument("compute_numerator_2d: denominator shape does not match the order");
    const DenseMatrix &c = series.coeffs;
    if (c.rows() < np.x + nq.x + 1 || c.cols() < np.y + nq.y + 1)
        throw InvalidArgument("compute_numerator_2d: series must cover indices up to (np1+nq1, np2+nq2)");

    DenseMatrix p(np.x + 1, np.y + 1);
    for (std::size_t i = 0; i <= np.x; ++i)
        for (std::size_t j = 0; j <= np.y; ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r <= nq.x; ++r) {
                const auto tx = detail::product_terms(i, r);
                for (std::size_t s = 0; s <= nq.y; ++s) {
                    const double qrs = q(r, s);
                    if (qrs == 0.0)
                        continue;
                    const auto ty = detail::product_terms(j, s);
                    double w = 0.0;
                    for (std::size_t u = 0; u < tx.count; ++u)
                        for (std::size_t v = 0; v < ty.count; ++v)
                            w += tx.terms[u].weight * ty.terms[v].weight *
                                 c(tx.terms[u].index, ty.terms[v].index);
                    sum += w * qrs;
                }
            }
            p(i, j) = sum;
        }
    return p;
}

RationalCheb2D build_pade_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order,
                             const PadeOptions &options) {
    DenseMatrix q = select_denominator_2d(series, order, options);
    DenseMatrix p = compute_numerator_2d(series, q, order);
    return {std::move(p), std::move(q), series.rect};
}

RationalCheb2D build_pade_2d(const Sampler2D &f, const Rect &rect, const PadeOrder2D &order, Extent2D n,
                             const PadeOptions &options) {
    return build_pade_2d(cheb_coeffs_2d(f, rect, order.series_degree(), n), order, options);
}

RationalCheb2D build_pade_2d(const Sampler2D &f, const Rect &rect, const PadeOrder2D &order,
                             const ChebyshevQuadrature &rule_x, const ChebyshevQuadrature &rule_y,
                             const PadeOptions &options) {
    return build_pade_2d(cheb_coeffs_2d(f, rect, order.series_degree(), rule_x, rule_y), order, options);
}

EvalResult eval_rational_2d(const RationalCheb2D &r, double x, double y, double pole_rel_tol) {
    if (!r.rect.contains(x, y)) {
        std::ostringstream msg;
        msg << "(" << x << ", " << y << ") outside the approximant rectangle";
        throw OutOfDomain(msg.str());
    }
    const double tx = affine_to_reference(r.rect.x, x);
    const double ty = affine_to_reference(r.rect.y, y);
    const double num = eval_cheb_plain_2d(r.p, tx, ty);
    const double den = eval_cheb_plain_2d(r.q, tx, ty);
    double q_l1 = 0.0;
    for (double v : r.q.entries())
        q_l1 += std::abs(v);
    return {num / den, std::abs(den) < pole_rel_tol * q_l1};
}

} // namespace padecheb
