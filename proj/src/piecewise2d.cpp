#include "padecheb/piecewise2d.hpp"

#include <string>

#include "padecheb/errors.hpp"

namespace padecheb {
namespace {

template <class BuildCell>
PiecewiseApprox2D build_cells(const Partition2D &partition, Execution exec, BuildCell &&build_cell) {
    const Extent2D counts = partition.cell_counts();
    const std::size_t total = counts.x * counts.y;
    std::vector<CellApprox2D> built(total);
    std::vector<std::string> errors(total);
    for_each_index(total, exec, [&](std::size_t flat) {
        try {
            built[flat] = build_cell(flat / counts.y, flat % counts.y);
        } catch (const std::exception &e) {
            errors[flat] = e.what();
            if (errors[flat].empty())
                errors[flat] = "unknown failure";
        }
    });

    PiecewiseApprox2D out{partition, std::move(built), {}};
    for (std::size_t flat = 0; flat < total; ++flat)
        if (!errors[flat].empty())
            out.failures.push_back({flat, std::move(errors[flat])});
    return out;
}

} // namespace

PiecewiseApprox2D build_pi2dc(const Sampler2D &f, const Partition2D &partition, Extent2D degree, Extent2D n,
                              Execution exec) {
    const ChebyshevQuadrature rule_x(n.x, degree.x);
    const ChebyshevQuadrature rule_y(n.y, degree.y);
    return build_cells(partition, exec, [&](std::size_t ix, std::size_t iy) -> CellApprox2D {
        return cheb_coeffs_2d(f, partition.cell(ix, iy), degree, rule_x, rule_y);
    });
}

PiecewiseApprox2D build_pi2dpc(const Sampler2D &f, const Partition2D &partition, const PadeOrder2D &order,
                               Extent2D n, const PadeOptions &options, Execution exec) {
    const Extent2D degree = order.series_degree();
    const ChebyshevQuadrature rule_x(n.x, degree.x);
    const ChebyshevQuadrature rule_y(n.y, degree.y);
    return build_cells(partition, exec, [&](std::size_t ix, std::size_t iy) -> CellApprox2D {
        return build_pade_2d(f, partition.cell(ix, iy), order, rule_x, rule_y, options);
    });
}

EvalResult eval_pi2d(const PiecewiseApprox2D &approx, double x, double y, double pole_rel_tol) {
    const std::size_t ix = approx.partition.x.locate(x);
    const std::size_t iy = approx.partition.y.locate(y);
    const CellApprox2D &cell = approx.at(ix, iy);
    if (const auto *r = std::get_if<RationalCheb2D>(&cell))
        return eval_rational_2d(*r, x, y, pole_rel_tol);
    if (const auto *s = std::get_if<ChebyshevSeries2D>(&cell))
        return {eval_cheb_series_2d(*s, x, y), false};
    throw CellBuildError(ix * approx.partition.y.cell_count() + iy, "no approximant was built for this cell");
}

} // namespace padecheb
