#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "padecheb/cheb2d.hpp"
#include "padecheb/pade2d.hpp"
#include "padecheb/parallel.hpp"
#include "padecheb/piecewise1d.hpp"

namespace padecheb {

struct Partition2D {
    Partition1D x;
    Partition1D y;

    Extent2D cell_counts() const noexcept { return {x.cell_count(), y.cell_count()}; }
    Rect cell(std::size_t ix, std::size_t iy) const { return {x.cell(ix), y.cell(iy)}; }
    Rect domain() const { return {x.domain(), y.domain()}; }

    friend bool operator==(const Partition2D &, const Partition2D &) = default;
};

using CellApprox2D = std::variant<std::monostate, ChebyshevSeries2D, RationalCheb2D>;

/// cells are stored x-major: cells[ix * N_y + iy]. Failed cells hold monostate and
/// their flat index appears in `failures`.
struct PiecewiseApprox2D {
    Partition2D partition;
    std::vector<CellApprox2D> cells;
    std::vector<CellFailure> failures;

    bool complete() const noexcept { return failures.empty(); }
    const CellApprox2D &at(std::size_t ix, std::size_t iy) const {
        return cells[ix * partition.y.cell_count() + iy];
    }
};

/// Pi2DC: per-box truncated bivariate Chebyshev series of degree (d_x, d_y).
PiecewiseApprox2D build_pi2dc(const Sampler2D &f, const Partition2D &partition, Extent2D degree, Extent2D n,
                              Execution exec = Execution::parallel);

/// Pi2DPC: per-box bivariate Padé-Chebyshev approximant of one order.
PiecewiseApprox2D build_pi2dpc(const Sampler2D &f, const Partition2D &partition, const PadeOrder2D &order,
                               Extent2D n, const PadeOptions &options = {},
                               Execution exec = Execution::parallel);

/// Half-open ownership along each axis, closed on the last cell of that axis.
EvalResult eval_pi2d(const PiecewiseApprox2D &approx, double x, double y,
                     double pole_rel_tol = default_pole_rel_tol);

} // namespace padecheb
