#include "padecheb/pade1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "linearization.hpp"
#include "padecheb/errors.hpp"

namespace padecheb {

PadeOrder1D::PadeOrder1D(std::size_t np, std::size_t nq) : np_(np), nq_(nq) {
    if (!(np >= nq && nq >= 1)) {
        std::ostringstream msg;
        msg << "Padé order requires np >= nq >= 1, got (" << np << ", " << nq << ")";
        throw InvalidArgument(msg.str());
    }
}

DenseMatrix assemble_denominator_system(const ChebyshevSeries1D &series, const PadeOrder1D &order) {
    const std::size_t np = order.np();
    const std::size_t nq = order.nq();
    if (series.coeffs.size() < order.series_degree() + 1) {
        std::ostringstream msg;
        msg << "denominator system needs " << order.series_degree() + 1 << " Chebyshev coefficients, got "
            << series.coeffs.size();
        throw InvalidArgument(msg.str());
    }
    const auto &c = series.coeffs;
    auto coeff = [&](std::ptrdiff_t m) { return m < 0 ? 0.0 : c[static_cast<std::size_t>(m)]; };

    DenseMatrix a(nq, nq + 1);
    for (std::size_t row = 0; row < nq; ++row) {
        const auto k = static_cast<std::ptrdiff_t>(np + 1 + row);
        for (std::size_t j = 0; j <= nq; ++j) {
            const auto jj = static_cast<std::ptrdiff_t>(j);
            a(row, j) = coeff(k - jj) + coeff(k + jj);
        }
    }
    return a;
}

namespace {

std::vector<double> normalize_denominator(std::vector<double> q, double rel_tol) {
    double inf_norm = 0.0;
    for (double v : q)
        inf_norm = std::max(inf_norm, std::abs(v));
    const double scale = std::abs(q[0]) > rel_tol * inf_norm ? q[0] : inf_norm;
    for (double &v : q)
        v /= scale;
    return q;
}

} // namespace

std::vector<double> solve_denominator(const DenseMatrix &a, const PadeOptions &options) {
    if (a.cols() != a.rows() + 1)
        throw InvalidArgument("solve_denominator: expected an nq x (nq+1) system");
    return normalize_denominator(choose_kernel_vector(kernel_basis(a, options.rank_tol)), options.normalize_rel_tol);
}

std::vector<double> compute_numerator(const ChebyshevSeries1D &series, std::span<const double> q,
                                      const PadeOrder1D &order) {
    const std::size_t np = order.np();
    const std::size_t nq = order.nq();
    if (q.size() != nq + 1)
        throw InvalidArgument("compute_numerator: denominator length must be nq + 1");
    if (series.coeffs.size() < np + nq + 1)
        throw InvalidArgument("compute_numerator: series must cover indices 0..np+nq");

    // Unprimed view of the series: the c0 term enters the product at half weight.
    auto coeff = [&](std::size_t m) { return m == 0 ? 0.5 * series.coeffs[0] : series.coeffs[m]; };

    std::vector<double> p(np + 1, 0.0);
    for (std::size_t k = 0; k <= np; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= nq; ++j) {
            const auto terms = detail::product_terms(k, j);
            double cj = 0.0;
            for (std::size_t t = 0; t < terms.count; ++t)
                cj += terms.terms[t].weight * coeff(terms.terms[t].index);
            s += cj * q[j];
        }
        p[k] = s;
    }
    return p;
}

RationalCheb1D build_pade_1d(const ChebyshevSeries1D &series, const PadeOrder1D &order,
                             const PadeOptions &options) {
    const DenseMatrix a = assemble_denominator_system(series, order);
    std::vector<double> q = solve_denominator(a, options);
    std::vector<double> p = compute_numerator(series, q, order);
    return {std::move(p), std::move(q), series.interval};
}

RationalCheb1D build_pade_1d(const Sampler1D &f, const Interval &interval, const PadeOrder1D &order,
                             std::size_t n, const PadeOptions &options) {
    return build_pade_1d(cheb_coeffs_1d(f, interval, order.series_degree(), n), order, options);
}

RationalCheb1D build_pade_1d(const Sampler1D &f, const Interval &interval, const PadeOrder1D &order,
                             const ChebyshevQuadrature &rule, const PadeOptions &options) {
    return build_pade_1d(cheb_coeffs_1d(f, interval, order.series_degree(), rule), order, options);
}

EvalResult eval_rational_1d(const RationalCheb1D &r, double x, double pole_rel_tol) {
    if (!r.interval.contains(x)) {
        std::ostringstream msg;
        msg << "x = " << x << " outside [" << r.interval.a() << ", " << r.interval.b() << "]";
        throw OutOfDomain(msg.str());
    }
    const double t = affine_to_reference(r.interval, x);
    const double num = eval_cheb_plain(r.p, t);
    const double den = eval_cheb_plain(r.q, t);
    double q_l1 = 0.0;
    for (double v : r.q)
        q_l1 += std::abs(v);
    return {num / den, std::abs(den) < pole_rel_tol * q_l1};
}

} // namespace padecheb
