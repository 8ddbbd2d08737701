#pragma once

#include <array>
#include <cstddef>

namespace padecheb::detail {

struct ProductTerm {
    std::size_t index;
    double weight;
};

/// Contributions to the T_i coefficient of T_a·T_r under T_a T_r = (T_{a+r} + T_{|a-r|})/2:
/// the returned (a, w) pairs satisfy [T_i](T_a T_r) = Σ w over matching a. At most three
/// terms; when i = r > 0 the index 0 appears twice.
struct ProductTerms {
    std::array<ProductTerm, 3> terms{};
    std::size_t count = 0;
};

inline ProductTerms product_terms(std::size_t i, std::size_t r) noexcept {
    ProductTerms out;
    if (i >= r)
        out.terms[out.count++] = {i - r, 0.5};
    out.terms[out.count++] = {i + r, 0.5};
    if (r >= i && i > 0)
        out.terms[out.count++] = {r - i, 0.5};
    return out;
}

} // namespace padecheb::detail
