#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "padecheb/analysis.hpp"
#include "padecheb/cheb2d.hpp"

namespace padecheb {

enum class Method { cheb, pade, picheb, pipade };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Process exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_config_error = 2, exit_build_failure = 3, exit_io_error = 4 };

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when output files cannot be created or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One approximation experiment. Pairs carry (x, y) values; 1D runs read only x.
struct RunConfig {
    std::string function;
    int dim = 0; ///< 0: the function's arity
    Method method = Method::pipade;
    std::vector<double> domain; ///< empty: registry default; else [a, b] or [ax, bx, ay, by]
    Extent2D cells{1, 1};
    Extent2D np{20, 20};
    Extent2D nq{20, 20};
    std::optional<Extent2D> degree; ///< Chebyshev methods; 1D defaults to np + nq, 2D to np + 2nq + 1 per axis
    Extent2D n{200, 200};
    std::vector<std::vector<double>> windows; ///< empty: the whole domain
    Extent2D grid{0, 0};                      ///< 0: 10 points per smallest cell, with a floor
    std::string out_dir = ".";
    std::optional<double> rank_tol;
    double pole_rel_tol = 1e-12;
    double normalize_rel_tol = 1e-10;
    bool serial = false;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

nlohmann::json to_json(const RunConfig &config);

/// Fields missing from `j` keep their values in `base`. Throws ConfigError.
RunConfig run_config_from_json(const nlohmann::json &j, RunConfig base = {});

struct RunResult {
    int exit_code = exit_ok;
    std::string message;
    nlohmann::json summary;
    std::vector<ErrorReport> reports;
};

/// Builds the approximant, samples it, and writes values.csv, errors.csv and
/// summary.json into config.out_dir. Never throws; failures map to exit codes.
RunResult run(const RunConfig &config);

struct ConvergenceConfig {
    std::string function;
    std::vector<std::size_t> cells;
    std::size_t np = 20;
    std::size_t nq = 20;
    std::optional<std::size_t> degree; ///< piecewise Chebyshev degree; defaults to np + nq
    std::size_t n = 200;
    std::vector<double> window; ///< empty: the function's domain
    std::size_t grid = 0;
    std::optional<double> rank_tol;
    bool serial = false;
};

struct ConvergenceResult {
    ConvergenceTable cheb;
    ConvergenceTable pade;
};

/// Sweeps the cell counts with piecewise Chebyshev and PiPC side by side.
/// An order is left empty when either neighbouring error sits at roundoff level.
/// Throws ConfigError, or CellBuildError when a cell fails.
ConvergenceResult run_convergence(const ConvergenceConfig &config);

/// CSV with header N,l1_cheb,order_cheb,l1_pade,order_pade.
std::string convergence_csv(const ConvergenceResult &result);

/// "%.17g" formatting used by every CSV writer.
std::string format_double(double v);

} // namespace padecheb
