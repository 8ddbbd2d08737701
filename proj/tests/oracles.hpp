#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline double cheb_t(std::size_t k, double t) {
    t = std::fmax(-1.0, std::fmin(1.0, t));
    return std::cos(static_cast<double>(k) * std::acos(t));
}

inline double cheb_plain(const std::vector<double> &c, double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        s += c[k] * cheb_t(k, t);
    return s;
}

// Plain Chebyshev coefficients of g on [-1,1] up to `degree`, by an m-point
// Gauss-Chebyshev rule written with angles. Exact when g is a polynomial of
// degree < 2m - degree.
template <class G>
std::vector<double> project_1d(G g, std::size_t degree, std::size_t m) {
    std::vector<double> out(degree + 1, 0.0);
    for (std::size_t l = 0; l < m; ++l) {
        const double theta = (static_cast<double>(l) + 0.5) * std::numbers::pi / static_cast<double>(m);
        const double v = g(std::cos(theta));
        for (std::size_t k = 0; k <= degree; ++k)
            out[k] += v * std::cos(static_cast<double>(k) * theta);
    }
    for (std::size_t k = 0; k <= degree; ++k)
        out[k] *= (k == 0 ? 1.0 : 2.0) / static_cast<double>(m);
    return out;
}

// Same for a bivariate g; result[i][j].
template <class G>
std::vector<std::vector<double>> project_2d(G g, std::size_t dx, std::size_t dy, std::size_t m) {
    std::vector<std::vector<double>> out(dx + 1, std::vector<double>(dy + 1, 0.0));
    for (std::size_t a = 0; a < m; ++a) {
        const double tx = (static_cast<double>(a) + 0.5) * std::numbers::pi / static_cast<double>(m);
        for (std::size_t b = 0; b < m; ++b) {
            const double ty = (static_cast<double>(b) + 0.5) * std::numbers::pi / static_cast<double>(m);
            const double v = g(std::cos(tx), std::cos(ty));
            for (std::size_t i = 0; i <= dx; ++i)
                for (std::size_t j = 0; j <= dy; ++j)
                    out[i][j] += v * std::cos(static_cast<double>(i) * tx) * std::cos(static_cast<double>(j) * ty);
        }
    }
    for (std::size_t i = 0; i <= dx; ++i)
        for (std::size_t j = 0; j <= dy; ++j)
            out[i][j] *= (i == 0 ? 1.0 : 2.0) * (j == 0 ? 1.0 : 2.0) / static_cast<double>(m * m);
    return out;
}

// Homogeneous residual sums written straight from the index formulas.
inline double residual_1d(const std::vector<double> &c, const std::vector<double> &q, long k) {
    auto at = [&](long i) { return (i < 0 || i >= static_cast<long>(c.size())) ? 0.0 : c[static_cast<std::size_t>(i)]; };
    double s = 0.0;
    for (long j = 0; j < static_cast<long>(q.size()); ++j)
        s += (at(k - j) + at(k + j)) * q[static_cast<std::size_t>(j)];
    return s;
}

inline double residual_2d(const std::vector<std::vector<double>> &c, const std::vector<std::vector<double>> &q,
                          long i, long j) {
    auto at = [&](long a, long b) {
        if (a < 0 || b < 0 || a >= static_cast<long>(c.size()) || b >= static_cast<long>(c[0].size()))
            return 0.0;
        return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    double s = 0.0;
    for (long r = 0; r < static_cast<long>(q.size()); ++r)
        for (long t = 0; t < static_cast<long>(q[0].size()); ++t)
            s += (at(i - r, j - t) + at(i - r, j + t) + at(i + r, j - t) + at(i + r, j + t)) *
                 q[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)];
    return s;
}

inline std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(n);
    for (double &x : v)
        x = u(rng);
    return v;
}

// Random smooth function: a decaying random Chebyshev series on [-1,1].
struct SmoothFunction {
    std::vector<double> c;
    double operator()(double t) const { return cheb_plain(c, t); }
};

inline SmoothFunction random_smooth(std::mt19937_64 &rng, std::size_t terms = 24) {
    SmoothFunction f;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t k = 0; k < terms; ++k)
        f.c.push_back(u(rng) * std::pow(0.5, static_cast<double>(k)));
    return f;
}

} // namespace oracle
