#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace padecheb {

/// Row-major dense real matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const double> entries() const noexcept { return data_; }
    std::span<double> entries() noexcept { return data_; }
    std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    /// Largest absolute entry (0 for an empty matrix).
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;

    friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> multiply(const DenseMatrix &a, std::span<const double> v);
DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b);

/// Orthonormal basis of the numerical kernel of a matrix.
///
/// The basis holds the right singular vectors whose singular value is at most
/// rank_tolerance, in the order the SVD produces them: descending singular value,
/// so the last vector belongs to the smallest one. Every vector has unit norm and
/// its first entry of magnitude above 64·eps is positive.
struct KernelResult {
    std::vector<std::vector<double>> basis;
    std::size_t numerical_rank = 0;
    double rank_tolerance = 0.0;
    double largest_singular_value = 0.0;
};

/// tol defaults to max(rows, cols)·eps·σ_max. Throws InvalidArgument for a
/// matrix with no columns or with non-finite entries.
KernelResult kernel_basis(const DenseMatrix &a, std::optional<double> tol = std::nullopt);

/// The last basis vector. Throws NoKernel when the basis is empty.
std::vector<double> choose_kernel_vector(const KernelResult &kernel);

} // namespace padecheb
