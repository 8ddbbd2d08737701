#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "padecheb/cheb_core.hpp"
#include "padecheb/pade1d.hpp"
#include "padecheb/parallel.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

/// Strictly increasing breakpoints a_0 < a_1 < ... < a_N.
class Partition1D {
  public:
    explicit Partition1D(std::vector<double> nodes);

    std::span<const double> nodes() const noexcept { return nodes_; }
    std::size_t cell_count() const noexcept { return nodes_.size() - 1; }
    Interval cell(std::size_t j) const { return {nodes_[j], nodes_[j + 1]}; }
    Interval domain() const { return {nodes_.front(), nodes_.back()}; }
    double min_cell_width() const noexcept;

    /// Owning cell of x: [a_j, a_{j+1}) for every cell but the last, which is closed.
    /// Throws OutOfDomain outside [a_0, a_N].
    std::size_t locate(double x) const;

    friend bool operator==(const Partition1D &, const Partition1D &) = default;

  private:
    std::vector<double> nodes_;
};

Partition1D uniform_partition(const Interval &interval, std::size_t cells);

/// monostate marks a cell whose build failed.
using CellApprox1D = std::variant<std::monostate, ChebyshevSeries1D, RationalCheb1D>;

struct CellFailure {
    std::size_t cell;
    std::string message;
};

struct PiecewiseApprox1D {
    Partition1D partition;
    std::vector<CellApprox1D> cells;
    std::vector<PadeOrder1D> orders; ///< per cell; empty for piecewise Chebyshev builds
    std::vector<CellFailure> failures;

    bool complete() const noexcept { return failures.empty(); }
};

/// Piecewise Padé-Chebyshev (PiPC). `orders` holds either one order used for every
/// cell or exactly one per cell. A single node set of size n serves all cells.
/// Cell failures are recorded in `failures`; the remaining cells are still built.
PiecewiseApprox1D build_pipc(const Sampler1D &f, const Partition1D &partition,
                             std::span<const PadeOrder1D> orders, std::size_t n,
                             const PadeOptions &options = {}, Execution exec = Execution::parallel);

/// Piecewise truncated Chebyshev series of one degree in every cell.
PiecewiseApprox1D build_picheb(const Sampler1D &f, const Partition1D &partition, std::size_t degree,
                               std::size_t n, Execution exec = Execution::parallel);

/// Evaluates the owning cell. Throws CellBuildError if that cell failed to build.
EvalResult eval_pipc(const PiecewiseApprox1D &approx, double x, double pole_rel_tol = default_pole_rel_tol);

} // namespace padecheb
