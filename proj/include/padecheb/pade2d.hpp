#pragma once

#include <cstddef>

#include "padecheb/cheb2d.hpp"
#include "padecheb/dense_linalg.hpp"
#include "padecheb/pade1d.hpp"
#include "padecheb/types.hpp"

namespace padecheb {

/// Numerator degrees (n_p1, n_p2) and denominator degrees (n_q1, n_q2) with
/// n_pi ≥ n_qi ≥ 1.
class PadeOrder2D {
  public:
    PadeOrder2D(Extent2D np, Extent2D nq);

    Extent2D np() const noexcept { return np_; }
    Extent2D nq() const noexcept { return nq_; }

    /// Coefficient extents read by the construction: (n_p1 + 2n_q1 + 1, n_p2 + 2n_q2 + 1).
    Extent2D series_degree() const noexcept { return {np_.x + 2 * nq_.x + 1, np_.y + 2 * nq_.y + 1}; }
    std::size_t denominator_unknowns() const noexcept { return (nq_.x + 1) * (nq_.y + 1); }
    std::size_t numerator_unknowns() const noexcept { return (np_.x + 1) * (np_.y + 1); }

    friend bool operator==(const PadeOrder2D &, const PadeOrder2D &) = default;

  private:
    Extent2D np_;
    Extent2D nq_;
};

/// R = P/Q with P (n_p1+1)×(n_p2+1) and Q (n_q1+1)×(n_q2+1), plain double sums.
struct RationalCheb2D {
    DenseMatrix p;
    DenseMatrix q;
    Rect rect{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
};

/// Homogeneous block Toeplitz-plus-Hankel system for Q.
///
/// Rows are the residual indices (i, j), i = n_p1+1..n_p1+n_q1+1 and
/// j = n_p2+1..n_p2+n_q2+1 with j fastest, minus the final corner row.
/// Columns are the unknowns q_{r,s} with s fastest. Entry:
/// c_{i-r,j-s} + c_{i-r,j+s} + c_{i+r,j-s} + c_{i+r,j+s}.
DenseMatrix assemble_denominator_system_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order);

/// Kernel vector reshaped to (n_q1+1)×(n_q2+1) and scaled so q_{0,0} = 1, or
/// max |q_{r,s}| = 1 when q_{0,0} is negligible.
DenseMatrix solve_denominator_2d(const DenseMatrix &a, const PadeOrder2D &order,
                                 const PadeOptions &options = {});

/// Every residual equation the series can support: rows (i, j) with
/// i ≤ n_p1+n_q1+1, j ≤ n_p2+n_q2+1 and (i, j) outside the numerator block,
/// i fastest-outer / j fastest-inner. Entries are the T_i T_j coefficients of
/// c·T_r T_s, so the rows of the homogeneous system appear scaled by 1/4.
DenseMatrix assemble_residual_system_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order);

/// Denominator used by build_pade_2d. With options.rank_tol set this is
/// exactly solve_denominator_2d. Otherwise directions q with |A q| below
/// near_kernel_rel_tol · max|c| all count as kernel; among them the one with
/// the smallest residual over assemble_residual_system_2d is taken, and ties
/// at that level go to the direction closest to a constant denominator.
DenseMatrix select_denominator_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order,
                                  const PadeOptions &options = {});

/// p_{i,j} for 0 ≤ i ≤ n_p1, 0 ≤ j ≤ n_p2: the T_i(x)T_j(y) coefficient of f·Q,
/// using T_a T_b = (T_{a+b} + T_{|a-b|})/2 along each axis.
DenseMatrix compute_numerator_2d(const ChebyshevSeries2D &series, const DenseMatrix &q,
                                 const PadeOrder2D &order);

RationalCheb2D build_pade_2d(const ChebyshevSeries2D &series, const PadeOrder2D &order,
                             const PadeOptions &options = {});

RationalCheb2D build_pade_2d(const Sampler2D &f, const Rect &rect, const PadeOrder2D &order, Extent2D n,
                             const PadeOptions &options = {});

RationalCheb2D build_pade_2d(const Sampler2D &f, const Rect &rect, const PadeOrder2D &order,
                             const ChebyshevQuadrature &rule_x, const ChebyshevQuadrature &rule_y,
                             const PadeOptions &options = {});

EvalResult eval_rational_2d(const RationalCheb2D &r, double x, double y,
                            double pole_rel_tol = default_pole_rel_tol);

} // namespace padecheb
