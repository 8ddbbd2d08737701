#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "padecheb/types.hpp"

namespace padecheb {

using Sampler1D = std::function<double(double)>;

/// Roots of T_n in the order t_l = cos((l - 1/2)π/n), l = 1..n (strictly decreasing).
std::vector<double> cheb_points(std::size_t n);

/// G(t) = a + (b - a)(t + 1)/2, mapping [-1, 1] onto the interval.
double affine_to_domain(const Interval &interval, double t) noexcept;

/// Inverse of affine_to_domain.
double affine_to_reference(const Interval &interval, double x) noexcept;

/// Gauss-Chebyshev nodes of one size together with T_k(t_l) for k = 0..max_degree.
/// Building it once and reusing it across cells is what the piecewise drivers do.
class ChebyshevQuadrature {
  public:
    ChebyshevQuadrature(std::size_t n, std::size_t max_degree);

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::span<const double> nodes() const noexcept { return nodes_; }

    /// T_k at node l (0-based l).
    double basis(std::size_t l, std::size_t k) const noexcept { return table_[l * (max_degree_ + 1) + k]; }

  private:
    std::vector<double> nodes_;
    std::size_t max_degree_;
    std::vector<double> table_;
};

/// Truncated Chebyshev series using the primed convention: f ≈ c_0/2 + Σ_{k≥1} c_k T_k.
struct ChebyshevSeries1D {
    std::vector<double> coeffs;
    Interval interval{-1.0, 1.0};
    std::size_t n_quad = 0;

    std::size_t degree() const noexcept { return coeffs.size() - 1; }
};

/// coeffs[k] = (2/n) Σ_l f(G(t_l)) T_k(t_l), k = 0..degree.
/// Throws SamplingError on a non-finite sample; warns when n < degree + 1.
ChebyshevSeries1D cheb_coeffs_1d(const Sampler1D &f, const Interval &interval, std::size_t degree,
                                 std::size_t n);

/// Same as above with a precomputed node set (its max_degree must be ≥ degree).
ChebyshevSeries1D cheb_coeffs_1d(const Sampler1D &f, const Interval &interval, std::size_t degree,
                                 const ChebyshevQuadrature &rule);

/// Plain sum Σ_k coeffs[k] T_k(t) by Clenshaw's recurrence (no halving).
double eval_cheb_plain(std::span<const double> coeffs, double t);

/// Primed series value at x in series.interval. Throws OutOfDomain outside it.
double eval_cheb_series(const ChebyshevSeries1D &series, double x);

} // namespace padecheb
