#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "padecheb/cheb2d.hpp"
#include "padecheb/cheb_core.hpp"
#include "padecheb/parallel.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

using Evaluator1D = std::function<EvalResult(double)>;
using Evaluator2D = std::function<EvalResult(double, double)>;

/// One sample of the pointwise comparison between f and its approximant.
struct PointSample {
    double x = 0.0;
    double y = 0.0;
    double f = 0.0;
    double approx = 0.0;
    double abs_err = 0.0;
    bool pole = false;
};

/// Error norms over a uniform midpoint grid. Pole-flagged samples stay in the
/// norms and are counted in pole_count.
struct ErrorReport {
    double l1 = 0.0;
    double linf = 0.0;
    std::variant<Interval, Rect> window = Interval{-1.0, 1.0};
    Extent2D samples; ///< samples.y == 0 for a 1D report
    std::size_t pole_count = 0;
};

/// Midpoint grid a + (k + 1/2)h, k = 0..m-1. A point landing on a breakpoint is
/// moved 1e-12·(cell width) into the cell that owns the breakpoint.
std::vector<double> sample_points(const Interval &window, std::size_t m, std::span<const double> breakpoints = {});

/// Grid size along one axis: 10 points per smallest cell over the window, at least `minimum`.
std::size_t default_grid_size(double window_length, double min_cell_width, std::size_t minimum);

inline constexpr std::size_t min_grid_1d = 2048;
inline constexpr std::size_t min_grid_2d_axis = 256;

std::vector<PointSample> sample_errors(const Sampler1D &f, const Evaluator1D &approx, const Interval &window,
                                       std::size_t m, std::span<const double> breakpoints = {},
                                       Execution exec = Execution::parallel);

/// Samples ordered x-major (y fastest).
std::vector<PointSample> sample_errors(const Sampler2D &f, const Evaluator2D &approx, const Rect &window,
                                       Extent2D m, std::span<const double> x_breakpoints = {},
                                       std::span<const double> y_breakpoints = {},
                                       Execution exec = Execution::parallel);

/// L∞ = max |f - approx|, L¹ = composite midpoint rule. Throws InvalidArgument for an empty grid.
ErrorReport error_norms(const Sampler1D &f, const Evaluator1D &approx, const Interval &window, std::size_t m,
                        std::span<const double> breakpoints = {}, Execution exec = Execution::parallel);

ErrorReport error_norms(const Sampler2D &f, const Evaluator2D &approx, const Rect &window, Extent2D m,
                        std::span<const double> x_breakpoints = {}, std::span<const double> y_breakpoints = {},
                        Execution exec = Execution::parallel);

/// Reduces an existing sample set; the order of accumulation is the sample order.
ErrorReport summarize(std::span<const PointSample> samples, const Interval &window);
ErrorReport summarize(std::span<const PointSample> samples, const Rect &window, Extent2D m);

struct ConvergenceRow {
    std::size_t cells = 0;
    double error = 0.0;
    std::optional<double> order; ///< absent on the first row
};

using ConvergenceTable = std::vector<ConvergenceRow>;

/// order_k = ln(e_{k-1}/e_k) / ln(N_k/N_{k-1}). Throws InvalidArgument for
/// non-positive errors or cell counts that do not strictly increase.
ConvergenceTable convergence_orders(std::span<const std::pair<std::size_t, double>> rows);

} // namespace padecheb
