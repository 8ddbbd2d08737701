#include "padecheb/dense_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "padecheb/errors.hpp"

namespace padecheb {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw InvalidArgument("DenseMatrix: entry count does not match rows*cols");
}

double DenseMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_)
        m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double v : data_)
        s += v * v;
    return std::sqrt(s);
}

std::vector<double> multiply(const DenseMatrix &a, std::span<const double> v) {
    if (v.size() != a.cols())
        throw InvalidArgument("multiply: vector length does not match column count");
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            s += a(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows())
        throw InvalidArgument("multiply: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double ark = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) += ark * b(k, c);
        }
    return out;
}

KernelResult kernel_basis(const DenseMatrix &a, std::optional<double> tol) {
    if (a.cols() == 0)
        throw InvalidArgument("kernel_basis: matrix has no columns");
    for (double v : a.entries())
        if (!std::isfinite(v))
            throw InvalidArgument("kernel_basis: matrix has non-finite entries");

    const auto rows = static_cast<Eigen::Index>(a.rows());
    const auto cols = static_cast<Eigen::Index>(a.cols());
    KernelResult result;

    Eigen::MatrixXd v;
    Eigen::VectorXd sigma;
    if (rows == 0) {
        v = Eigen::MatrixXd::Identity(cols, cols);
    } else {
        const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
            a.entries().data(), rows, cols);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
        v = svd.matrixV();
        sigma = svd.singularValues();
    }

    result.largest_singular_value = sigma.size() > 0 ? sigma(0) : 0.0;
    result.rank_tolerance =
        tol.value_or(static_cast<double>(std::max(a.rows(), a.cols())) * std::numeric_limits<double>::epsilon() *
                     result.largest_singular_value);

    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > result.rank_tolerance)
            ++rank;
    result.numerical_rank = rank;

    // Columns of V past the numerical rank, still in descending singular-value order.
    const double sign_floor = 64.0 * std::numeric_limits<double>::epsilon();
    for (Eigen::Index c = static_cast<Eigen::Index>(rank); c < cols; ++c) {
        std::vector<double> vec(a.cols());
        double norm = 0.0;
        for (Eigen::Index r = 0; r < cols; ++r) {
            vec[static_cast<std::size_t>(r)] = v(r, c);
            norm += v(r, c) * v(r, c);
        }
        norm = std::sqrt(norm);
        const auto lead = std::find_if(vec.begin(), vec.end(), [&](double x) { return std::abs(x) > sign_floor; });
        const double scale = (lead != vec.end() && *lead < 0.0) ? -1.0 / norm : 1.0 / norm;
        for (double &x : vec)
            x *= scale;
        result.basis.push_back(std::move(vec));
    }
    return result;
}

std::vector<double> choose_kernel_vector(const KernelResult &kernel) {
    if (kernel.basis.empty())
        throw NoKernel("denominator system has full column rank; the Padé problem is ill-posed");
    return kernel.basis.back();
}

} // namespace padecheb
