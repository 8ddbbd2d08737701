#include "padecheb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "padecheb/errors.hpp"

namespace padecheb {

std::vector<double> sample_points(const Interval &window, std::size_t m, std::span<const double> breakpoints) {
    if (m == 0)
        throw InvalidArgument("sample grid is empty");
    const double h = window.length() / static_cast<double>(m);
    std::vector<double> xs(m);
    for (std::size_t k = 0; k < m; ++k) {
        double x = window.a() + (static_cast<double>(k) + 0.5) * h;
        const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
        if (it != breakpoints.end() && *it == x) {
            // Interior nodes belong to the cell on their right; the last node to the cell on its left.
            const bool last = std::next(it) == breakpoints.end();
            const double width = last ? (*it - *std::prev(it)) : (*std::next(it) - *it);
            x = last ? x - 1e-12 * width : x + 1e-12 * width;
        }
        xs[k] = x;
    }
    return xs;
}

std::size_t default_grid_size(double window_length, double min_cell_width, std::size_t minimum) {
    const double cells = std::ceil(window_length / min_cell_width);
    return std::max(minimum, static_cast<std::size_t>(10.0 * cells));
}

namespace {

PointSample compare(double x, double y, double fx, EvalResult r) {
    const double err = std::abs(fx - r.value);
    return {x, y, fx, r.value, std::isnan(err) ? std::numeric_limits<double>::infinity() : err, r.pole};
}

} // namespace

std::vector<PointSample> sample_errors(const Sampler1D &f, const Evaluator1D &approx, const Interval &window,
                                       std::size_t m, std::span<const double> breakpoints, Execution exec) {
    const std::vector<double> xs = sample_points(window, m, breakpoints);
    std::vector<PointSample> out(xs.size());
    for_each_index(xs.size(), exec, [&](std::size_t k) { out[k] = compare(xs[k], 0.0, f(xs[k]), approx(xs[k])); });
    return out;
}

std::vector<PointSample> sample_errors(const Sampler2D &f, const Evaluator2D &approx, const Rect &window,
                                       Extent2D m, std::span<const double> x_breakpoints,
                                       std::span<const double> y_breakpoints, Execution exec) {
    const std::vector<double> xs = sample_points(window.x, m.x, x_breakpoints);
    const std::vector<double> ys = sample_points(window.y, m.y, y_breakpoints);
    std::vector<PointSample> out(xs.size() * ys.size());
    for_each_index(out.size(), exec, [&](std::size_t k) {
        const double x = xs[k / ys.size()];
        const double y = ys[k % ys.size()];
        out[k] = compare(x, y, f(x, y), approx(x, y));
    });
    return out;
}

namespace {

void accumulate(std::span<const PointSample> samples, ErrorReport &report) {
    double sum = 0.0;
    for (const PointSample &s : samples) {
        sum += s.abs_err;
        report.linf = std::max(report.linf, s.abs_err);
        if (s.pole)
            ++report.pole_count;
    }
    report.l1 = sum;
}

} // namespace

ErrorReport summarize(std::span<const PointSample> samples, const Interval &window) {
    if (samples.empty())
        throw InvalidArgument("error_norms: empty sample grid");
    ErrorReport report;
    report.window = window;
    report.samples = {samples.size(), 0};
    accumulate(samples, report);
    report.l1 *= window.length() / static_cast<double>(samples.size());
    return report;
}

ErrorReport summarize(std::span<const PointSample> samples, const Rect &window, Extent2D m) {
    if (samples.empty() || samples.size() != m.x * m.y)
        throw InvalidArgument("error_norms: sample count does not match the grid");
    ErrorReport report;
    report.window = window;
    report.samples = m;
    accumulate(samples, report);
    report.l1 *= window.x.length() * window.y.length() / static_cast<double>(samples.size());
    return report;
}

ErrorReport error_norms(const Sampler1D &f, const Evaluator1D &approx, const Interval &window, std::size_t m,
                        std::span<const double> breakpoints, Execution exec) {
    return summarize(sample_errors(f, approx, window, m, breakpoints, exec), window);
}

ErrorReport error_norms(const Sampler2D &f, const Evaluator2D &approx, const Rect &window, Extent2D m,
                        std::span<const double> x_breakpoints, std::span<const double> y_breakpoints,
                        Execution exec) {
    if (m.x == 0 || m.y == 0)
        throw InvalidArgument("error_norms: empty sample grid");
    return summarize(sample_errors(f, approx, window, m, x_breakpoints, y_breakpoints, exec), window, m);
}

ConvergenceTable convergence_orders(std::span<const std::pair<std::size_t, double>> rows) {
    ConvergenceTable table;
    table.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto [cells, error] = rows[k];
        if (!(error > 0.0) || !std::isfinite(error))
            throw InvalidArgument("convergence_orders: errors must be positive and finite");
        ConvergenceRow row{cells, error, std::nullopt};
        if (k > 0) {
            const auto [prev_cells, prev_error] = rows[k - 1];
            if (cells <= prev_cells)
                throw InvalidArgument("convergence_orders: cell counts must strictly increase");
            row.order = std::log(prev_error / error) /
                        std::log(static_cast<double>(cells) / static_cast<double>(prev_cells));
        }
        table.push_back(row);
    }
    return table;
}

} // namespace padecheb
