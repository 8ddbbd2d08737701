#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "padecheb/cheb_core.hpp"
#include "padecheb/dense_linalg.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

/// Numerator and denominator degrees, np ≥ nq ≥ 1.
class PadeOrder1D {
  public:
    PadeOrder1D(std::size_t np, std::size_t nq);

    std::size_t np() const noexcept { return np_; }
    std::size_t nq() const noexcept { return nq_; }
    /// Highest Chebyshev coefficient index the construction reads: np + 2nq.
    std::size_t series_degree() const noexcept { return np_ + 2 * nq_; }

    friend bool operator==(const PadeOrder1D &, const PadeOrder1D &) = default;

  private:
    std::size_t np_;
    std::size_t nq_;
};

/// R(x) = Σ p_i T_i(t) / Σ q_j T_j(t), plain sums, t the reference variable of `interval`.
struct RationalCheb1D {
    std::vector<double> p;
    std::vector<double> q;
    Interval interval{-1.0, 1.0};
};

/// Tolerances that experiments may override. Defaults follow kernel_basis and
/// the q0-or-max-norm normalization rule.
struct PadeOptions {
    std::optional<double> rank_tol;
    double normalize_rel_tol = 1e-10;
    // Bivariate only: directions q with |A q| below this fraction of max |c|
    // count as kernel when no rank_tol is given.
    double near_kernel_rel_tol = 1.4901161193847656e-08;
};

/// nq × (nq+1) Toeplitz-plus-Hankel matrix with entry (k, j) = c_{k-j} + c_{k+j},
/// k = np+1..np+nq, j = 0..nq.
DenseMatrix assemble_denominator_system(const ChebyshevSeries1D &series, const PadeOrder1D &order);

/// Kernel vector of the denominator system, scaled so q0 = 1 when |q0| is not
/// negligible, else so that max |q_j| = 1.
std::vector<double> solve_denominator(const DenseMatrix &a, const PadeOptions &options = {});

/// Numerator coefficients from the linearized product f·Q truncated at degree np.
std::vector<double> compute_numerator(const ChebyshevSeries1D &series, std::span<const double> q,
                                      const PadeOrder1D &order);

/// Padé-Chebyshev approximant from an existing series (coefficients 0..np+2nq).
RationalCheb1D build_pade_1d(const ChebyshevSeries1D &series, const PadeOrder1D &order,
                             const PadeOptions &options = {});

/// Samples f with n Chebyshev nodes on `interval` and builds the (np, nq) approximant.
RationalCheb1D build_pade_1d(const Sampler1D &f, const Interval &interval, const PadeOrder1D &order,
                             std::size_t n, const PadeOptions &options = {});

RationalCheb1D build_pade_1d(const Sampler1D &f, const Interval &interval, const PadeOrder1D &order,
                             const ChebyshevQuadrature &rule, const PadeOptions &options = {});

/// Default relative pole guard: |Q(t)| < pole_rel_tol·‖q‖₁ raises the flag.
inline constexpr double default_pole_rel_tol = 1e-12;

EvalResult eval_rational_1d(const RationalCheb1D &r, double x, double pole_rel_tol = default_pole_rel_tol);

} // namespace padecheb
