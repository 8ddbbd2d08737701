#include "padecheb/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "padecheb/errors.hpp"
#include "padecheb/piecewise1d.hpp"
#include "padecheb/piecewise2d.hpp"
#include "padecheb/registry.hpp"

namespace padecheb {

using nlohmann::json;

std::string_view to_string(Method method) noexcept {
    switch (method) {
    case Method::cheb:
        return "cheb";
    case Method::pade:
        return "pade";
    case Method::picheb:
        return "picheb";
    case Method::pipade:
        return "pipade";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    for (Method m : {Method::cheb, Method::pade, Method::picheb, Method::pipade})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json extent_json(Extent2D e) { return json::array({e.x, e.y}); }

Extent2D extent_from(const json &j, const char *key) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0)
            throw ConfigError(std::string(key) + " must be non-negative");
        return {static_cast<std::size_t>(v), static_cast<std::size_t>(v)};
    }
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
        const auto x = j.at(0).get<long long>();
        const auto y = j.size() == 2 ? j.at(1).get<long long>() : x;
        if (x < 0 || y < 0)
            throw ConfigError(std::string(key) + " must be non-negative");
        return {static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
    }
    throw ConfigError(std::string(key) + " must be an integer or a pair of integers");
}

} // namespace

json to_json(const RunConfig &c) {
    json j;
    j["function"] = c.function;
    j["dim"] = c.dim;
    j["method"] = std::string(to_string(c.method));
    j["domain"] = c.domain;
    j["N"] = extent_json(c.cells);
    j["np"] = extent_json(c.np);
    j["nq"] = extent_json(c.nq);
    j["d"] = c.degree ? extent_json(*c.degree) : json(nullptr);
    j["n"] = extent_json(c.n);
    j["windows"] = c.windows;
    j["grid"] = extent_json(c.grid);
    j["out"] = c.out_dir;
    j["rank_tol"] = c.rank_tol ? json(*c.rank_tol) : json(nullptr);
    j["pole_tol"] = c.pole_rel_tol;
    j["normalize_tol"] = c.normalize_rel_tol;
    j["serial"] = c.serial;
    return j;
}

RunConfig run_config_from_json(const json &j, RunConfig c) {
    if (!j.is_object())
        throw ConfigError("configuration must be a JSON object");
    try {
        if (j.contains("function"))
            c.function = j.at("function").get<std::string>();
        if (j.contains("dim"))
            c.dim = j.at("dim").get<int>();
        if (j.contains("method")) {
            const auto name = j.at("method").get<std::string>();
            const auto m = parse_method(name);
            if (!m)
                throw ConfigError("unknown method '" + name + "'");
            c.method = *m;
        }
        if (j.contains("domain"))
            c.domain = j.at("domain").get<std::vector<double>>();
        if (j.contains("N"))
            c.cells = extent_from(j.at("N"), "N");
        if (j.contains("np"))
            c.np = extent_from(j.at("np"), "np");
        if (j.contains("nq"))
            c.nq = extent_from(j.at("nq"), "nq");
        if (j.contains("d"))
            c.degree = j.at("d").is_null() ? std::nullopt : std::optional(extent_from(j.at("d"), "d"));
        if (j.contains("n"))
            c.n = extent_from(j.at("n"), "n");
        if (j.contains("windows"))
            c.windows = j.at("windows").get<std::vector<std::vector<double>>>();
        if (j.contains("grid"))
            c.grid = extent_from(j.at("grid"), "grid");
        if (j.contains("out"))
            c.out_dir = j.at("out").get<std::string>();
        if (j.contains("rank_tol"))
            c.rank_tol = j.at("rank_tol").is_null() ? std::nullopt : std::optional(j.at("rank_tol").get<double>());
        if (j.contains("pole_tol"))
            c.pole_rel_tol = j.at("pole_tol").get<double>();
        if (j.contains("normalize_tol"))
            c.normalize_rel_tol = j.at("normalize_tol").get<double>();
        if (j.contains("serial"))
            c.serial = j.at("serial").get<bool>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    return c;
}

namespace {

struct Approximant {
    std::optional<PiecewiseApprox1D> one;
    std::optional<PiecewiseApprox2D> two;

    const std::vector<CellFailure> &failures() const { return one ? one->failures : two->failures; }
};

Rect resolve_domain(const RunConfig &c, const FunctionSpec &spec) {
    if (c.domain.empty())
        return spec.domain;
    if (c.dim == 1 && c.domain.size() == 2)
        return {Interval(c.domain[0], c.domain[1]), spec.domain.y};
    if (c.dim == 2 && c.domain.size() == 4)
        return {Interval(c.domain[0], c.domain[1]), Interval(c.domain[2], c.domain[3])};
    throw ConfigError("domain needs 2 values in 1D and 4 values in 2D");
}

bool is_global(Method m) { return m == Method::cheb || m == Method::pade; }
bool is_pade(Method m) { return m == Method::pade || m == Method::pipade; }

void check_output(std::ostream &os, const std::filesystem::path &path) {
    if (!os)
        throw IoError("failed writing " + path.string());
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    return os;
}

json window_json(const ErrorReport &r) {
    json j;
    if (const auto *w = std::get_if<Interval>(&r.window))
        j["window"] = {w->a(), w->b()};
    else {
        const auto &rect = std::get<Rect>(r.window);
        j["window"] = {rect.x.a(), rect.x.b(), rect.y.a(), rect.y.b()};
    }
    j["l1"] = r.l1;
    j["linf"] = r.linf;
    j["pole_count"] = r.pole_count;
    j["samples"] = extent_json(r.samples);
    return j;
}

} // namespace

RunResult run(const RunConfig &requested) {
    RunConfig config = requested;
    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    const Execution exec = config.serial ? Execution::serial : Execution::parallel;
    try {
        const auto spec = find_function(config.function);
        if (!spec)
            throw ConfigError("unknown function '" + config.function + "'");
        if (config.dim == 0)
            config.dim = spec->arity;
        if (config.dim != 1 && config.dim != 2)
            throw ConfigError("dim must be 1 or 2");
        if (spec->arity != config.dim)
            throw ConfigError("function '" + spec->name + "' has arity " + std::to_string(spec->arity) +
                              " but the method is " + std::to_string(config.dim) + "D");
        if (is_global(config.method) && (config.cells.x != 1 || (config.dim == 2 && config.cells.y != 1)))
            throw ConfigError("method '" + std::string(to_string(config.method)) + "' is global; N must be 1");
        if (config.cells.x == 0 || (config.dim == 2 && config.cells.y == 0))
            throw ConfigError("N must be positive");
        if (config.n.x == 0 || (config.dim == 2 && config.n.y == 0))
            throw ConfigError("quadrature size n must be positive");

        const Rect domain = resolve_domain(config, *spec);
        PadeOptions options;
        options.rank_tol = config.rank_tol;
        options.normalize_rel_tol = config.normalize_rel_tol;

        std::vector<ErrorReport> reports;
        json summary;
        summary["config"] = to_json(config);

        Approximant approx;
        if (config.dim == 1) {
            const Partition1D partition = uniform_partition(domain.x, config.cells.x);
            if (is_pade(config.method)) {
                const PadeOrder1D order(config.np.x, config.nq.x);
                approx.one = build_pipc(spec->f1, partition, std::span(&order, 1), config.n.x, options, exec);
            } else {
                const std::size_t d = config.degree ? config.degree->x : config.np.x + config.nq.x;
                approx.one = build_picheb(spec->f1, partition, d, config.n.x, exec);
            }
        } else {
            const Partition2D partition{uniform_partition(domain.x, config.cells.x),
                                        uniform_partition(domain.y, config.cells.y)};
            if (is_pade(config.method)) {
                const PadeOrder2D order(config.np, config.nq);
                approx.two = build_pi2dpc(spec->f2, partition, order, config.n, options, exec);
            } else {
                const Extent2D d = config.degree ? *config.degree : PadeOrder2D(config.np, config.nq).series_degree();
                approx.two = build_pi2dc(spec->f2, partition, d, config.n, exec);
            }
        }
        const double build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        summary["build_time_s"] = build_seconds;

        if (!approx.failures().empty()) {
            json failed = json::array();
            std::ostringstream msg;
            msg << approx.failures().size() << " cell(s) failed to build:";
            for (const CellFailure &f : approx.failures()) {
                failed.push_back({{"cell", f.cell}, {"message", f.message}});
                msg << "\n  cell " << f.cell << ": " << f.message;
            }
            summary["failed_cells"] = failed;
            result.exit_code = exit_build_failure;
            result.message = msg.str();
            result.summary = summary;
            std::error_code ec;
            std::filesystem::create_directories(config.out_dir, ec);
            if (!ec) {
                std::ofstream os(std::filesystem::path(config.out_dir) / "summary.json");
                os << summary.dump(2) << '\n';
            }
            return result;
        }

        std::error_code ec;
        std::filesystem::create_directories(config.out_dir, ec);
        if (ec)
            throw IoError("cannot create output directory " + config.out_dir + ": " + ec.message());
        const std::filesystem::path out(config.out_dir);

        const double pole_tol = config.pole_rel_tol;
        std::vector<std::vector<double>> windows = config.windows;
        if (windows.empty()) {
            if (config.dim == 1)
                windows.push_back({domain.x.a(), domain.x.b()});
            else
                windows.push_back({domain.x.a(), domain.x.b(), domain.y.a(), domain.y.b()});
        }

        if (config.dim == 1) {
            const PiecewiseApprox1D &pw = *approx.one;
            const Evaluator1D eval = [&](double x) { return eval_pipc(pw, x, pole_tol); };
            const auto nodes = pw.partition.nodes();
            const double hmin = pw.partition.min_cell_width();
            const std::size_t m = config.grid.x ? config.grid.x : default_grid_size(domain.x.length(), hmin, min_grid_1d);

            const auto samples = sample_errors(spec->f1, eval, domain.x, m, nodes, exec);
            {
                const auto path = out / "values.csv";
                auto os = open_output(path);
                os << "x,f,approx,abs_err,pole_flag\n";
                for (const PointSample &s : samples)
                    os << format_double(s.x) << ',' << format_double(s.f) << ',' << format_double(s.approx) << ','
                       << format_double(s.abs_err) << ',' << (s.pole ? 1 : 0) << '\n';
                check_output(os, path);
            }
            for (const auto &w : windows) {
                if (w.size() != 2)
                    throw ConfigError("1D windows need 2 values");
                const Interval window(w[0], w[1]);
                if (!(domain.x.contains(window.a()) && domain.x.contains(window.b())))
                    throw ConfigError("window lies outside the domain");
                const std::size_t mw =
                    config.grid.x ? config.grid.x : default_grid_size(window.length(), hmin, min_grid_1d);
                reports.push_back(error_norms(spec->f1, eval, window, mw, nodes, exec));
            }
        } else {
            const PiecewiseApprox2D &pw = *approx.two;
            const Evaluator2D eval = [&](double x, double y) { return eval_pi2d(pw, x, y, pole_tol); };
            const auto xn = pw.partition.x.nodes();
            const auto yn = pw.partition.y.nodes();
            const double hx = pw.partition.x.min_cell_width();
            const double hy = pw.partition.y.min_cell_width();
            auto grid_for = [&](const Rect &w) {
                return Extent2D{config.grid.x ? config.grid.x : default_grid_size(w.x.length(), hx, min_grid_2d_axis),
                                config.grid.y ? config.grid.y
                                              : default_grid_size(w.y.length(), hy, min_grid_2d_axis)};
            };
            const Extent2D m = grid_for(domain);
            const auto samples = sample_errors(spec->f2, eval, domain, m, xn, yn, exec);
            {
                const auto path = out / "values.csv";
                auto os = open_output(path);
                os << "x,y,f,approx,abs_err,pole_flag\n";
                for (const PointSample &s : samples)
                    os << format_double(s.x) << ',' << format_double(s.y) << ',' << format_double(s.f) << ','
                       << format_double(s.approx) << ',' << format_double(s.abs_err) << ',' << (s.pole ? 1 : 0)
                       << '\n';
                check_output(os, path);
            }
            for (const auto &w : windows) {
                if (w.size() != 4)
                    throw ConfigError("2D windows need 4 values");
                const Rect window{Interval(w[0], w[1]), Interval(w[2], w[3])};
                if (!(domain.contains(window.x.a(), window.y.a()) && domain.contains(window.x.b(), window.y.b())))
                    throw ConfigError("window lies outside the domain");
                reports.push_back(error_norms(spec->f2, eval, window, grid_for(window), xn, yn, exec));
            }
        }

        {
            const auto path = out / "errors.csv";
            auto os = open_output(path);
            if (config.dim == 1)
                os << "a,b,l1,linf,pole_count,samples\n";
            else
                os << "ax,bx,ay,by,l1,linf,pole_count,samples_x,samples_y\n";
            for (const ErrorReport &r : reports) {
                if (const auto *w = std::get_if<Interval>(&r.window))
                    os << format_double(w->a()) << ',' << format_double(w->b());
                else {
                    const auto &rect = std::get<Rect>(r.window);
                    os << format_double(rect.x.a()) << ',' << format_double(rect.x.b()) << ','
                       << format_double(rect.y.a()) << ',' << format_double(rect.y.b());
                }
                os << ',' << format_double(r.l1) << ',' << format_double(r.linf) << ',' << r.pole_count << ','
                   << r.samples.x;
                if (config.dim == 2)
                    os << ',' << r.samples.y;
                os << '\n';
            }
            check_output(os, path);
        }

        json wj = json::array();
        std::size_t poles = 0;
        for (const ErrorReport &r : reports) {
            wj.push_back(window_json(r));
            poles += r.pole_count;
        }
        summary["windows"] = wj;
        summary["pole_count"] = poles;
        summary["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        {
            const auto path = out / "summary.json";
            auto os = open_output(path);
            os << summary.dump(2) << '\n';
            check_output(os, path);
        }
        result.summary = std::move(summary);
        result.reports = std::move(reports);
        return result;
    } catch (const ConfigError &e) {
        result.exit_code = exit_config_error;
        result.message = e.what();
    } catch (const InvalidArgument &e) {
        result.exit_code = exit_config_error;
        result.message = e.what();
    } catch (const IoError &e) {
        result.exit_code = exit_io_error;
        result.message = e.what();
    } catch (const std::exception &e) {
        result.exit_code = exit_build_failure;
        result.message = e.what();
    }
    return result;
}

namespace {

std::optional<double> order_between(const ConvergenceRow &prev, const ConvergenceRow &cur, double floor) {
    if (!(prev.error > floor && cur.error > floor))
        return std::nullopt;
    const std::pair<std::size_t, double> rows[] = {{prev.cells, prev.error}, {cur.cells, cur.error}};
    return convergence_orders(rows).back().order;
}

} // namespace

ConvergenceResult run_convergence(const ConvergenceConfig &config) {
    const auto spec = find_function(config.function);
    if (!spec)
        throw ConfigError("unknown function '" + config.function + "'");
    if (spec->arity != 1)
        throw ConfigError("convergence sweeps are univariate; '" + spec->name + "' has arity 2");
    if (config.cells.empty())
        throw ConfigError("N-list is empty");
    for (std::size_t k = 0; k < config.cells.size(); ++k)
        if (config.cells[k] == 0 || (k > 0 && config.cells[k] <= config.cells[k - 1]))
            throw ConfigError("N-list must be positive and strictly increasing");

    Interval window = spec->domain.x;
    if (!config.window.empty()) {
        if (config.window.size() != 2)
            throw ConfigError("window needs 2 values");
        window = Interval(config.window[0], config.window[1]);
        if (!(spec->domain.x.contains(window.a()) && spec->domain.x.contains(window.b())))
            throw ConfigError("window lies outside the domain");
    }
    const Execution exec = config.serial ? Execution::serial : Execution::parallel;
    const PadeOrder1D order(config.np, config.nq);
    const std::size_t degree = config.degree.value_or(config.np + config.nq);
    PadeOptions options;
    options.rank_tol = config.rank_tol;

    ConvergenceResult out;
    for (std::size_t cells : config.cells) {
        const Partition1D partition = uniform_partition(spec->domain.x, cells);
        const auto nodes = partition.nodes();
        const std::size_t m = config.grid ? config.grid
                                          : default_grid_size(window.length(), partition.min_cell_width(), min_grid_1d);

        const auto cheb = build_picheb(spec->f1, partition, degree, config.n, exec);
        const auto pade = build_pipc(spec->f1, partition, std::span(&order, 1), config.n, options, exec);
        for (const auto *pw : {&cheb, &pade})
            if (!pw->failures.empty())
                throw CellBuildError(pw->failures.front().cell, pw->failures.front().message);

        const auto ec = error_norms(
            spec->f1, [&](double x) { return eval_pipc(cheb, x); }, window, m, nodes, exec);
        const auto ep = error_norms(
            spec->f1, [&](double x) { return eval_pipc(pade, x); }, window, m, nodes, exec);
        out.cheb.push_back({cells, ec.l1, std::nullopt});
        out.pade.push_back({cells, ep.l1, std::nullopt});
    }

    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * window.length();
    for (std::size_t k = 1; k < out.cheb.size(); ++k) {
        out.cheb[k].order = order_between(out.cheb[k - 1], out.cheb[k], floor);
        out.pade[k].order = order_between(out.pade[k - 1], out.pade[k], floor);
    }
    return out;
}

std::string convergence_csv(const ConvergenceResult &result) {
    std::ostringstream os;
    os << "N,l1_cheb,order_cheb,l1_pade,order_pade\n";
    auto opt = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string(); };
    for (std::size_t k = 0; k < result.pade.size(); ++k)
        os << result.pade[k].cells << ',' << format_double(result.cheb[k].error) << ',' << opt(result.cheb[k].order)
           << ',' << format_double(result.pade[k].error) << ',' << opt(result.pade[k].order) << '\n';
    return os.str();
}

} // namespace padecheb
