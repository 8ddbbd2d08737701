#include "padecheb/registry.hpp"

#include <algorithm>
#include <cmath>

namespace padecheb {

namespace functions {

double jump_root(double x) {
    if (x < -0.4)
        return x * x * x;
    if (x < 0.4)
        return x * x + 1.0;
    return 1.16 - std::sqrt(x - 0.4);
}

double sign4xy(double x, double y) {
    const double v = 4.0 * x * y;
    return static_cast<double>((v > 0.0) - (v < 0.0));
}

double sod_like(double x, double /*y*/) {
    if (x < -0.4)
        return 1.0;
    if (x < 0.0)
        return x * x - 0.85 * x + 0.5;
    if (x < 0.4)
        return 0.5;
    return 0.0;
}

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

} // namespace functions

namespace {

FunctionSpec univariate(std::string name, std::string description, Sampler1D f) {
    FunctionSpec spec;
    spec.name = std::move(name);
    spec.arity = 1;
    spec.description = std::move(description);
    spec.f1 = std::move(f);
    return spec;
}

FunctionSpec bivariate(std::string name, std::string description, Sampler2D f) {
    FunctionSpec spec;
    spec.name = std::move(name);
    spec.arity = 2;
    spec.description = std::move(description);
    spec.f2 = std::move(f);
    return spec;
}

std::vector<FunctionSpec> make_registry() {
    std::vector<FunctionSpec> r;
    r.push_back(univariate("jump-root-1d",
                           "x^3 on [-1,-0.4), x^2+1 on [-0.4,0.4), 1.16-sqrt(x-0.4) on [0.4,1]: "
                           "a jump at -0.4 and a root singularity at 0.4",
                           functions::jump_root));
    r.push_back(univariate("exp1d", "exp(x), smooth control", [](double x) { return std::exp(x); }));
    r.push_back(univariate("runge1d", "1/(1+25x^2), smooth control with nearby complex poles", functions::runge));
    r.push_back(univariate("abs1d", "|x|, kink at 0", [](double x) { return std::abs(x); }));
    r.push_back(univariate("const1d", "constant 1", [](double) { return 1.0; }));
    r.push_back(bivariate("sign4xy", "sign(4xy): jumps along both axes", functions::sign4xy));
    r.push_back(bivariate("sod-like-2d",
                          "1 | x^2-17x/20+1/2 | 1/2 | 0 over x-bands split at -0.4, 0, 0.4; constant in y",
                          functions::sod_like));
    r.push_back(bivariate("const2d", "constant 1", [](double, double) { return 1.0; }));
    return r;
}

} // namespace

const std::vector<FunctionSpec> &registry() {
    static const std::vector<FunctionSpec> functions = make_registry();
    return functions;
}

std::optional<FunctionSpec> find_function(std::string_view name) {
    const auto &all = registry();
    const auto it = std::find_if(all.begin(), all.end(), [&](const FunctionSpec &s) { return s.name == name; });
    if (it == all.end())
        return std::nullopt;
    return *it;
}

} // namespace padecheb
