// Command-line front end: approx, convergence, registry.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "padecheb/errors.hpp"
#include "padecheb/registry.hpp"
#include "padecheb/run.hpp"

using namespace padecheb;

namespace {

std::vector<double> parse_reals(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const long long v = std::stoll(item);
        if (v < 0)
            throw ConfigError("negative size '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

Extent2D parse_extent(const std::string &text, const char *flag) {
    const auto v = parse_sizes(text);
    if (v.size() == 1)
        return {v[0], v[0]};
    if (v.size() == 2)
        return {v[0], v[1]};
    throw ConfigError(std::string(flag) + " takes one value or 'x,y'");
}

struct ApproxFlags {
    std::string config_path, function, method, domain, cells, np, nq, degree, n, grid, out;
    std::vector<std::string> windows;
    int dim = 0;
    double rank_tol = 0.0, pole_tol = 0.0, normalize_tol = 0.0;
    bool serial = false;
};

RunConfig build_config(const ApproxFlags &f, const CLI::App &cmd) {
    RunConfig c;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in)
            throw IoError("cannot read config file " + f.config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
        }
        c = run_config_from_json(j);
    }
    auto given = [&](const char *name) { return cmd.get_option(name)->count() > 0; };
    if (given("--function"))
        c.function = f.function;
    if (given("--dim"))
        c.dim = f.dim;
    if (given("--method")) {
        const auto m = parse_method(f.method);
        if (!m)
            throw ConfigError("unknown method '" + f.method + "' (cheb, pade, picheb, pipade)");
        c.method = *m;
    }
    if (given("--domain"))
        c.domain = parse_reals(f.domain);
    if (given("--N"))
        c.cells = parse_extent(f.cells, "--N");
    if (given("--np"))
        c.np = parse_extent(f.np, "--np");
    if (given("--nq"))
        c.nq = parse_extent(f.nq, "--nq");
    if (given("--d"))
        c.degree = parse_extent(f.degree, "--d");
    if (given("--n"))
        c.n = parse_extent(f.n, "--n");
    if (given("--grid"))
        c.grid = parse_extent(f.grid, "--grid");
    if (given("--window")) {
        c.windows.clear();
        for (const auto &w : f.windows)
            c.windows.push_back(parse_reals(w));
    }
    if (given("--out"))
        c.out_dir = f.out;
    if (given("--rank-tol"))
        c.rank_tol = f.rank_tol;
    if (given("--pole-tol"))
        c.pole_rel_tol = f.pole_tol;
    if (given("--normalize-tol"))
        c.normalize_rel_tol = f.normalize_tol;
    if (given("--serial"))
        c.serial = f.serial;
    if (c.function.empty())
        throw ConfigError("--function is required (see `padecheb registry`)");
    return c;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Chebyshev and Padé-Chebyshev approximation of piecewise smooth functions"};
    app.require_subcommand(1);

    ApproxFlags af;
    auto *approx = app.add_subcommand("approx", "Build one approximant and write values.csv, errors.csv, summary.json");
    approx->add_option("--config", af.config_path, "JSON run configuration; flags override its fields");
    approx->add_option("--function", af.function, "Registry function name");
    approx->add_option("--dim", af.dim, "1 or 2 (default: the function's arity)")->check(CLI::IsMember({1, 2}));
    approx->add_option("--method", af.method, "cheb | pade | picheb | pipade");
    approx->add_option("--domain", af.domain, "a,b or ax,bx,ay,by");
    approx->add_option("--N", af.cells, "Cells: N or Nx,Ny");
    approx->add_option("--np", af.np, "Numerator degree(s)");
    approx->add_option("--nq", af.nq, "Denominator degree(s)");
    approx->add_option("--d", af.degree, "Chebyshev degree(s) for cheb/picheb");
    approx->add_option("--n", af.n, "Quadrature nodes per cell: n or nx,ny");
    approx->add_option("--window", af.windows, "Error window a,b or ax,bx,ay,by (repeatable)");
    approx->add_option("--grid", af.grid, "Sample grid: m or mx,my");
    approx->add_option("--out", af.out, "Output directory");
    approx->add_option("--rank-tol", af.rank_tol, "Absolute rank tolerance for the kernel computation");
    approx->add_option("--pole-tol", af.pole_tol, "Relative pole guard on |Q|");
    approx->add_option("--normalize-tol", af.normalize_tol, "Relative threshold for the q0 = 1 normalization");
    approx->add_flag("--serial", af.serial, "Use the serial reference kernels");

    std::string cv_function, cv_cells, cv_window, cv_out;
    std::size_t cv_np = 20, cv_nq = 20, cv_n = 200, cv_grid = 0, cv_degree = 0;
    bool cv_serial = false;
    auto *conv = app.add_subcommand("convergence", "Piecewise Chebyshev vs PiPC L1 errors over a list of N");
    conv->add_option("--function", cv_function, "Univariate registry function")->required();
    conv->add_option("--N", cv_cells, "Strictly increasing cell counts, e.g. 2,8,32")->required();
    conv->add_option("--np", cv_np, "Numerator degree");
    conv->add_option("--nq", cv_nq, "Denominator degree");
    conv->add_option("--d", cv_degree, "Piecewise Chebyshev degree (default np+nq)");
    conv->add_option("--n", cv_n, "Quadrature nodes per cell");
    conv->add_option("--window", cv_window, "Error window a,b");
    conv->add_option("--grid", cv_grid, "Sample count (default 10 per cell, at least 2048)");
    conv->add_option("--out", cv_out, "CSV path (default stdout)");
    conv->add_flag("--serial", cv_serial, "Use the serial reference kernels");

    bool reg_json = false;
    auto *reg = app.add_subcommand("registry", "List the built-in test functions");
    reg->add_flag("--json", reg_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        if (*approx) {
            const RunConfig config = build_config(af, *approx);
            const RunResult result = run(config);
            if (result.exit_code != exit_ok) {
                std::cerr << "padecheb: " << result.message << '\n';
                return result.exit_code;
            }
            for (const ErrorReport &r : result.reports)
                std::cout << "L1 = " << format_double(r.l1) << "  Linf = " << format_double(r.linf)
                          << "  poles = " << r.pole_count << '\n';
            std::cout << "wrote " << config.out_dir << "/{values.csv,errors.csv,summary.json}\n";
            return exit_ok;
        }
        if (*conv) {
            ConvergenceConfig c;
            c.function = cv_function;
            c.cells = parse_sizes(cv_cells);
            c.np = cv_np;
            c.nq = cv_nq;
            if (cv_degree > 0)
                c.degree = cv_degree;
            c.n = cv_n;
            if (!cv_window.empty())
                c.window = parse_reals(cv_window);
            c.grid = cv_grid;
            c.serial = cv_serial;
            const std::string csv = convergence_csv(run_convergence(c));
            if (cv_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream os(cv_out, std::ios::binary | std::ios::trunc);
                if (!(os << csv)) {
                    std::cerr << "padecheb: cannot write " << cv_out << '\n';
                    return exit_io_error;
                }
            }
            return exit_ok;
        }
        if (*reg) {
            if (reg_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto &f : registry())
                    j.push_back({{"name", f.name}, {"arity", f.arity}, {"description", f.description}});
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto &f : registry())
                    std::cout << f.name << '\t' << f.arity << "D\t" << f.description << '\n';
            }
            return exit_ok;
        }
    } catch (const ConfigError &e) {
        std::cerr << "padecheb: " << e.what() << '\n';
        return exit_config_error;
    } catch (const InvalidArgument &e) {
        std::cerr << "padecheb: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::invalid_argument &e) {
        std::cerr << "padecheb: bad number: " << e.what() << '\n';
        return exit_config_error;
    } catch (const IoError &e) {
        std::cerr << "padecheb: " << e.what() << '\n';
        return exit_io_error;
    } catch (const std::exception &e) {
        std::cerr << "padecheb: " << e.what() << '\n';
        return exit_build_failure;
    }
    return exit_ok;
}
