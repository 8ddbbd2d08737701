#include "padecheb/piecewise1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "padecheb/errors.hpp"

namespace padecheb {

Partition1D::Partition1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        throw InvalidArgument("partition needs at least two nodes");
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (!std::isfinite(nodes_[j]))
            throw InvalidArgument("partition nodes must be finite");
        if (j > 0 && !(nodes_[j - 1] < nodes_[j]))
            throw InvalidArgument("partition nodes must be strictly increasing");
    }
}

double Partition1D::min_cell_width() const noexcept {
    double w = nodes_.back() - nodes_.front();
    for (std::size_t j = 1; j < nodes_.size(); ++j)
        w = std::min(w, nodes_[j] - nodes_[j - 1]);
    return w;
}

std::size_t Partition1D::locate(double x) const {
    if (!(x >= nodes_.front() && x <= nodes_.back())) {
        std::ostringstream msg;
        msg << "x = " << x << " outside [" << nodes_.front() << ", " << nodes_.back() << "]";
        throw OutOfDomain(msg.str());
    }
    // First node strictly greater than x; the cell to its left owns x.
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.end())
        return cell_count() - 1;
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

Partition1D uniform_partition(const Interval &interval, std::size_t cells) {
    if (cells == 0)
        throw InvalidArgument("uniform_partition: need at least one cell");
    std::vector<double> nodes(cells + 1);
    const double width = interval.length();
    for (std::size_t j = 0; j <= cells; ++j)
        nodes[j] = interval.a() + width * static_cast<double>(j) / static_cast<double>(cells);
    nodes.front() = interval.a();
    nodes.back() = interval.b();
    return Partition1D(std::move(nodes));
}

namespace {

template <class BuildCell>
PiecewiseApprox1D build_cells(const Partition1D &partition, Execution exec, BuildCell &&build_cell) {
    const std::size_t cells = partition.cell_count();
    std::vector<CellApprox1D> built(cells);
    std::vector<std::string> errors(cells);
    for_each_index(cells, exec, [&](std::size_t j) {
        try {
            built[j] = build_cell(j);
        } catch (const std::exception &e) {
            errors[j] = e.what();
            if (errors[j].empty())
                errors[j] = "unknown failure";
        }
    });

    PiecewiseApprox1D out{partition, std::move(built), {}, {}};
    for (std::size_t j = 0; j < cells; ++j)
        if (!errors[j].empty())
            out.failures.push_back({j, std::move(errors[j])});
    return out;
}

} // namespace

PiecewiseApprox1D build_pipc(const Sampler1D &f, const Partition1D &partition,
                             std::span<const PadeOrder1D> orders, std::size_t n, const PadeOptions &options,
                             Execution exec) {
    const std::size_t cells = partition.cell_count();
    if (orders.size() != 1 && orders.size() != cells)
        throw InvalidArgument("build_pipc: give one order or one order per cell");

    std::vector<PadeOrder1D> per_cell;
    per_cell.reserve(cells);
    std::size_t max_degree = 0;
    for (std::size_t j = 0; j < cells; ++j) {
        per_cell.push_back(orders.size() == 1 ? orders[0] : orders[j]);
        max_degree = std::max(max_degree, per_cell.back().series_degree());
    }

    const ChebyshevQuadrature rule(n, max_degree);
    PiecewiseApprox1D out = build_cells(partition, exec, [&](std::size_t j) -> CellApprox1D {
        return build_pade_1d(f, partition.cell(j), per_cell[j], rule, options);
    });
    out.orders = std::move(per_cell);
    return out;
}

PiecewiseApprox1D build_picheb(const Sampler1D &f, const Partition1D &partition, std::size_t degree,
                               std::size_t n, Execution exec) {
    const ChebyshevQuadrature rule(n, degree);
    return build_cells(partition, exec, [&](std::size_t j) -> CellApprox1D {
        return cheb_coeffs_1d(f, partition.cell(j), degree, rule);
    });
}

EvalResult eval_pipc(const PiecewiseApprox1D &approx, double x, double pole_rel_tol) {
    const std::size_t j = approx.partition.locate(x);
    const CellApprox1D &cell = approx.cells[j];
    if (const auto *r = std::get_if<RationalCheb1D>(&cell))
        return eval_rational_1d(*r, x, pole_rel_tol);
    if (const auto *s = std::get_if<ChebyshevSeries1D>(&cell))
        return {eval_cheb_series(*s, x), false};
    throw CellBuildError(j, "no approximant was built for this cell");
}

} // namespace padecheb
