#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padecheb/cheb2d.hpp"
#include "padecheb/cheb_core.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

/// A closed-form test function known to the CLI.
struct FunctionSpec {
    std::string name;
    int arity = 1;
    std::string description;
    Rect domain{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}}; ///< y ignored for arity 1
    Sampler1D f1;
    Sampler2D f2;
};

const std::vector<FunctionSpec> &registry();

/// nullopt when the name is unknown.
std::optional<FunctionSpec> find_function(std::string_view name);

namespace functions {

/// x³ on [-1,-0.4), x²+1 on [-0.4,0.4), 1.16 - (x-0.4)^{1/2} on [0.4,1].
double jump_root(double x);
double sign4xy(double x, double y);
/// 1 | x² - 17x/20 + 1/2 | 1/2 | 0 over the bands split at -0.4, 0, 0.4; constant in y.
double sod_like(double x, double y);
double runge(double x);

} // namespace functions

} // namespace padecheb
