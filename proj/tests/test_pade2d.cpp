#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "padecheb/errors.hpp"
#include "padecheb/pade2d.hpp"
#include "padecheb/piecewise2d.hpp"

using namespace padecheb;

namespace {

const Rect unit{Interval(-1, 1), Interval(-1, 1)};

using Grid = std::vector<std::vector<double>>;

Grid to_grid(const DenseMatrix &m) {
    Grid g(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g[i][j] = m(i, j);
    return g;
}

ChebyshevSeries2D random_series(std::mt19937_64 &rng, Extent2D degree) {
    return {DenseMatrix(degree.x + 1, degree.y + 1, oracle::random_vector(rng, (degree.x + 1) * (degree.y + 1))),
            unit, {0, 0}};
}

PadeOrder2D random_order(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> d(1, 4);
    const Extent2D nq{d(rng), d(rng)};
    return PadeOrder2D({nq.x + d(rng) - 1, nq.y + d(rng) - 1}, nq);
}

// T_i T_j coefficients of (series)·Q via independent projection.
Grid product_coeffs(const ChebyshevSeries2D &s, const DenseMatrix &q) {
    const Grid c = to_grid(s.coeffs), qq = to_grid(q);
    auto eval = [](const Grid &g, double x, double y) {
        double v = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g[i].size(); ++j)
                v += g[i][j] * oracle::cheb_t(i, x) * oracle::cheb_t(j, y);
        return v;
    };
    const std::size_t dx = c.size() + qq.size() - 2, dy = c[0].size() + qq[0].size() - 2;
    return oracle::project_2d([&](double x, double y) { return eval(c, x, y) * eval(qq, x, y); }, dx, dy,
                              std::max(dx, dy) + 4);
}

double max_error_grid(const RationalCheb2D &r, const Sampler2D &f, int m) {
    double worst = 0.0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const double x = r.rect.x.a() + r.rect.x.length() * a / (m - 1);
            const double y = r.rect.y.a() + r.rect.y.length() * b / (m - 1);
            worst = std::max(worst, std::abs(eval_rational_2d(r, x, y).value - f(x, y)));
        }
    return worst;
}

} // namespace

TEST(PadeOrder2D, CountsAndValidation) {
    const PadeOrder2D o({45, 45}, {5, 5});
    EXPECT_EQ(o.series_degree(), (Extent2D{56, 56}));
    EXPECT_EQ(o.denominator_unknowns(), 36u);
    EXPECT_EQ(o.numerator_unknowns(), 46u * 46u);
    EXPECT_THROW(PadeOrder2D({1, 1}, {2, 1}), InvalidArgument);
    EXPECT_THROW(PadeOrder2D({1, 1}, {1, 0}), InvalidArgument);
}

TEST(Assemble2D, ConstantSeriesGivesZeroMatrix) {
    const PadeOrder2D order({2, 2}, {1, 1});
    DenseMatrix c(order.series_degree().x + 1, order.series_degree().y + 1);
    c(0, 0) = 1.0;
    EXPECT_EQ(assemble_denominator_system_2d({c, unit, {0, 0}}, order), DenseMatrix(3, 4));
}

TEST(Assemble2D, SizeAndCoverage) {
    std::mt19937_64 rng(1);
    const PadeOrder2D order({3, 2}, {2, 1});
    const auto a = assemble_denominator_system_2d(random_series(rng, order.series_degree()), order);
    EXPECT_EQ(a.rows(), 5u);
    EXPECT_EQ(a.cols(), 6u);
    EXPECT_EQ(a.rows() + order.numerator_unknowns(), order.numerator_unknowns() + order.denominator_unknowns() - 1);
    EXPECT_THROW(assemble_denominator_system_2d(random_series(rng, {5, 5}), order), InvalidArgument);
}

TEST(Assemble2D, DirectSumAndProductOracles) {
    std::mt19937_64 rng(3232);
    for (int draw = 0; draw < 50; ++draw) {
        const PadeOrder2D order = random_order(rng);
        const auto series = random_series(rng, order.series_degree());
        const auto a = assemble_denominator_system_2d(series, order);
        const Grid c = to_grid(series.coeffs);
        const std::size_t qy = order.nq().y + 1;
        for (int trial = 0; trial < 100; ++trial) {
            const auto qv = oracle::random_vector(rng, order.denominator_unknowns());
            Grid q(order.nq().x + 1, std::vector<double>(qy));
            for (std::size_t k = 0; k < qv.size(); ++k)
                q[k / qy][k % qy] = qv[k];
            const auto aq = multiply(a, qv);
            std::size_t row = 0;
            for (std::size_t di = 0; di <= order.nq().x; ++di)
                for (std::size_t dj = 0; dj <= order.nq().y && row < a.rows(); ++dj, ++row)
                    EXPECT_NEAR(aq[row],
                                oracle::residual_2d(c, q, static_cast<long>(order.np().x + 1 + di),
                                                    static_cast<long>(order.np().y + 1 + dj)),
                                1e-13);
        }
        // Rows are four times the T_i T_j coefficient of the product.
        const auto qv = oracle::random_vector(rng, order.denominator_unknowns());
        const auto prod = product_coeffs(series, DenseMatrix(order.nq().x + 1, qy, qv));
        const auto aq = multiply(a, qv);
        std::size_t row = 0;
        for (std::size_t di = 0; di <= order.nq().x; ++di)
            for (std::size_t dj = 0; dj <= order.nq().y && row < a.rows(); ++dj, ++row)
                EXPECT_NEAR(aq[row], 4.0 * prod[order.np().x + 1 + di][order.np().y + 1 + dj], 1e-11);
    }
}

TEST(Assemble2D, SeparableBlocks) {
    std::mt19937_64 rng(64);
    const PadeOrder2D order({3, 4}, {2, 2});
    const auto d = order.series_degree();
    const auto u = oracle::random_vector(rng, d.x + 1), v = oracle::random_vector(rng, d.y + 1);
    DenseMatrix c(d.x + 1, d.y + 1);
    for (std::size_t i = 0; i <= d.x; ++i)
        for (std::size_t j = 0; j <= d.y; ++j)
            c(i, j) = u[i] * v[j];
    const auto a = assemble_denominator_system_2d({c, unit, {0, 0}}, order);
    auto th = [](const std::vector<double> &w, long k, long r) {
        auto at = [&](long i) { return i < 0 ? 0.0 : w[static_cast<std::size_t>(i)]; };
        return at(k - r) + at(k + r);
    };
    std::size_t row = 0;
    for (long i = 4; i <= 6; ++i)
        for (long j = 5; j <= 7 && row < a.rows(); ++j, ++row)
            for (long r = 0; r <= 2; ++r)
                for (long s = 0; s <= 2; ++s)
                    EXPECT_NEAR(a(row, static_cast<std::size_t>(r * 3 + s)), th(u, i, r) * th(v, j, s), 1e-14);
}

TEST(ResidualSystem2D, MatchesProductOutsideNumerator) {
    std::mt19937_64 rng(2718);
    for (int draw = 0; draw < 20; ++draw) {
        const PadeOrder2D order = random_order(rng);
        const auto series = random_series(rng, order.series_degree());
        const auto e = assemble_residual_system_2d(series, order);
        const auto qv = oracle::random_vector(rng, order.denominator_unknowns());
        const auto prod = product_coeffs(series, DenseMatrix(order.nq().x + 1, order.nq().y + 1, qv));
        const auto eq = multiply(e, qv);
        std::size_t row = 0;
        for (std::size_t i = 0; i <= order.np().x + order.nq().x + 1; ++i)
            for (std::size_t j = 0; j <= order.np().y + order.nq().y + 1; ++j) {
                if (i <= order.np().x && j <= order.np().y)
                    continue;
                ASSERT_LT(row, e.rows());
                EXPECT_NEAR(eq[row++], prod[i][j], 1e-12);
            }
        EXPECT_EQ(row, e.rows());
    }
}

TEST(SolveDenominator2D, ZeroMatrixUsesLastBasisVector) {
    const PadeOrder2D order({2, 2}, {1, 1});
    const auto q = solve_denominator_2d(DenseMatrix(3, 4), order);
    EXPECT_EQ(q, DenseMatrix(2, 2, {0, 0, 0, 1}));
}

TEST(SolveDenominator2D, RankDeficientIsDeterministic) {
    const PadeOrder2D order({1, 1}, {1, 1});
    const DenseMatrix a(3, 4, {1, 1, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0});
    const auto first = solve_denominator_2d(a, order);
    EXPECT_EQ(first, solve_denominator_2d(a, order));
    const auto k = kernel_basis(a);
    ASSERT_EQ(k.basis.size(), 3u);
    auto expected = k.basis.back();
    const double scale = std::abs(expected[0]) > 1e-10 ? expected[0] : 1.0;
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(first.entries()[i], expected[i] / scale, 1e-15);
}

TEST(SolveDenominator2D, FullRankUniqueUpToSign) {
    std::mt19937_64 rng(17);
    const PadeOrder2D order({2, 2}, {1, 1});
    const DenseMatrix a(3, 4, oracle::random_vector(rng, 12));
    const auto q = solve_denominator_2d(a, order);
    EXPECT_EQ(q(0, 0), 1.0);
    for (double r : multiply(a, std::vector<double>(q.entries().begin(), q.entries().end())))
        EXPECT_NEAR(r, 0.0, 1e-13);
    EXPECT_THROW(solve_denominator_2d(DenseMatrix(4, 4), order), InvalidArgument);
}

TEST(SolveDenominator2D, KernelResidualOnRandomSeries) {
    std::mt19937_64 rng(555);
    for (int draw = 0; draw < 200; ++draw) {
        const PadeOrder2D order({3, 3}, {2, 2});
        const auto series = random_series(rng, order.series_degree());
        const auto a = assemble_denominator_system_2d(series, order);
        const auto q = solve_denominator_2d(a, order);
        std::vector<double> qv(q.entries().begin(), q.entries().end());
        double qn = 0.0, rn = 0.0;
        for (double v : qv)
            qn += v * v;
        for (double v : multiply(a, qv))
            rn += v * v;
        EXPECT_LE(std::sqrt(rn), 1e-10 * a.frobenius_norm() * std::sqrt(qn));
        // A well-resolved random system has a one-dimensional kernel, so the
        // default selection coincides with the plain kernel vector.
        EXPECT_EQ(select_denominator_2d(series, order), q);
    }
}

TEST(SelectDenominator2D, ExplicitRankTolIsPlainKernelRule) {
    std::mt19937_64 rng(8);
    const PadeOrder2D order({2, 2}, {1, 1});
    const auto series = random_series(rng, order.series_degree());
    PadeOptions options;
    options.rank_tol = 0.5;
    EXPECT_EQ(select_denominator_2d(series, order, options),
              solve_denominator_2d(assemble_denominator_system_2d(series, order), order, options));
}

TEST(Numerator2D, ConstantFunction) {
    const PadeOrder2D order({2, 3}, {1, 2});
    DenseMatrix c(order.series_degree().x + 1, order.series_degree().y + 1);
    c(0, 0) = 1.0;
    const DenseMatrix q(2, 3, {0.3, -1, 2, 0.5, 0.25, -0.125});
    const auto p = compute_numerator_2d({c, unit, {0, 0}}, q, order);
    ASSERT_EQ(p.rows(), 3u);
    ASSERT_EQ(p.cols(), 4u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(p(i, j), i < 2 && j < 3 ? q(i, j) : 0.0);
}

TEST(Numerator2D, ConstantDenominator) {
    std::mt19937_64 rng(19);
    const PadeOrder2D order({3, 2}, {1, 1});
    const auto series = random_series(rng, order.series_degree());
    DenseMatrix q(2, 2);
    q(0, 0) = 1.0;
    const auto p = compute_numerator_2d(series, q, order);
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 2; ++j)
            EXPECT_EQ(p(i, j), series.coeffs(i, j));
}

TEST(Numerator2D, ProductOfXY) {
    const PadeOrder2D order({1, 1}, {1, 1});
    DenseMatrix c(4, 4);
    c(1, 1) = 1.0;
    const auto p = compute_numerator_2d({c, unit, {0, 0}}, DenseMatrix(2, 2, {1, 0, 0, 1}), order);
    // xy(1 + xy) = 1/4 + xy + (T2(x) + T2(y) + T2(x)T2(y))/4
    EXPECT_DOUBLE_EQ(p(0, 0), 0.25);
    EXPECT_DOUBLE_EQ(p(0, 1), 0.0);
    EXPECT_DOUBLE_EQ(p(1, 0), 0.0);
    EXPECT_DOUBLE_EQ(p(1, 1), 1.0);
}

TEST(Numerator2D, MatchesProjectedProduct) {
    std::mt19937_64 rng(4040);
    for (int draw = 0; draw < 30; ++draw) {
        const PadeOrder2D order = random_order(rng);
        const auto series = random_series(rng, order.series_degree());
        const DenseMatrix q(order.nq().x + 1, order.nq().y + 1,
                            oracle::random_vector(rng, order.denominator_unknowns()));
        const auto p = compute_numerator_2d(series, q, order);
        const auto prod = product_coeffs(series, q);
        for (std::size_t i = 0; i <= order.np().x; ++i)
            for (std::size_t j = 0; j <= order.np().y; ++j)
                EXPECT_NEAR(p(i, j), prod[i][j], 1e-12);
    }
}

TEST(BuildPade2D, ConstantFunction) {
    const auto r = build_pade_2d([](double, double) { return 1.0; }, unit, PadeOrder2D({2, 2}, {1, 1}), {8, 8});
    EXPECT_LE(max_error_grid(r, [](double, double) { return 1.0; }, 30), 1e-14);
}

TEST(BuildPade2D, RecoversSeparableRational) {
    auto f = [](double x, double y) { return (1 + 0.3 * x) * (1 + 0.2 * y) / ((1 + 0.4 * x) * (1 + 0.3 * y)); };
    const auto r = build_pade_2d(f, unit, PadeOrder2D({1, 1}, {1, 1}), {64, 64});
    EXPECT_LE(max_error_grid(r, f, 50), 1e-7);
    EXPECT_NEAR(eval_rational_2d(r, 0.5, 0.5).value, f(0.5, 0.5), 1e-7);
    EXPECT_NEAR(r.q(0, 1), 0.3, 1e-10);
    EXPECT_NEAR(r.q(1, 0), 0.4, 1e-10);
    EXPECT_NEAR(r.q(1, 1), 0.12, 1e-10);
}

TEST(BuildPade2D, RecoversNonSeparableRational) {
    auto f = [](double x, double y) { return (1 + 0.3 * x - 0.2 * x * y) / (2 + 0.5 * x + 0.4 * y + 0.3 * x * y); };
    const Rect rect{Interval(0, 1), Interval(-1, 0.5)};
    const auto r = build_pade_2d(f, rect, PadeOrder2D({1, 1}, {1, 1}), {64, 64});
    EXPECT_LE(max_error_grid(r, f, 50), 1e-7);
}

TEST(EvalRational2D, Examples) {
    const DenseMatrix pq(2, 2, {1.5, 0.2, -0.1, 0.3});
    const RationalCheb2D same{pq, pq, unit};
    EXPECT_DOUBLE_EQ(eval_rational_2d(same, 0.2, -0.7).value, 1.0);
    const RationalCheb2D pole{DenseMatrix(1, 1, {1.0}), DenseMatrix(2, 2, {0, 0, 0, 1}), unit};
    EXPECT_TRUE(eval_rational_2d(pole, 0.0, 0.4).pole);
    EXPECT_FALSE(eval_rational_2d(pole, 0.5, 0.4).pole);
    EXPECT_THROW(eval_rational_2d(pole, 0.0, 1.4), OutOfDomain);
}

TEST(Pade2DProperties, ConstantDenominatorEqualsTruncation) {
    std::mt19937_64 rng(21);
    const PadeOrder2D order({6, 5}, {2, 2});
    for (int draw = 0; draw < 5; ++draw) {
        const auto u = oracle::random_smooth(rng, 12), v = oracle::random_smooth(rng, 12);
        auto f = [&](double x, double y) { return u(x) * v(y) + u(y); };
        const auto s = cheb_coeffs_2d(f, unit, order.series_degree(), {32, 32});
        DenseMatrix q(3, 3);
        q(0, 0) = 1.0;
        const RationalCheb2D r{compute_numerator_2d(s, q, order), q, unit};
        DenseMatrix trunc(7, 6);
        for (std::size_t i = 0; i <= 6; ++i)
            for (std::size_t j = 0; j <= 5; ++j)
                trunc(i, j) = s.coeffs(i, j);
        const ChebyshevSeries2D ts{trunc, unit, s.n_quad};
        for (int t = 0; t < 200; ++t) {
            const double x = -1 + 2.0 * (t % 20) / 19, y = -1 + 2.0 * (t / 20) / 9;
            EXPECT_NEAR(eval_rational_2d(r, x, y).value, eval_cheb_series_2d(ts, x, y), 1e-14);
        }
    }
}

TEST(Pade2DProperties, DenominatorScaling) {
    std::mt19937_64 rng(22);
    const PadeOrder2D order({3, 3}, {1, 2});
    const auto series = random_series(rng, order.series_degree());
    DenseMatrix q(2, 3, oracle::random_vector(rng, 6, 0.1));
    q(0, 0) = 1.0;
    const double alpha = 3.5;
    DenseMatrix aq = q;
    for (double &x : aq.entries())
        x *= alpha;
    const auto p = compute_numerator_2d(series, q, order);
    const auto ap = compute_numerator_2d(series, aq, order);
    for (std::size_t k = 0; k < p.entries().size(); ++k)
        EXPECT_NEAR(ap.entries()[k], alpha * p.entries()[k], 1e-13 * (1 + std::abs(alpha * p.entries()[k])));
    const RationalCheb2D r{p, q, unit}, ar{ap, aq, unit};
    for (int t = 0; t < 100; ++t) {
        const double x = -1 + 2.0 * (t % 10) / 9, y = -1 + 2.0 * (t / 10) / 9;
        EXPECT_NEAR(eval_rational_2d(r, x, y).value, eval_rational_2d(ar, x, y).value, 1e-13);
    }
}

TEST(Pi2DPC, ConstantEveryCell) {
    const Partition2D p{uniform_partition(Interval(-1, 1), 2), uniform_partition(Interval(-1, 1), 2)};
    const auto approx = build_pi2dpc([](double, double) { return 1.0; }, p, PadeOrder2D({2, 2}, {1, 1}), {8, 8});
    ASSERT_TRUE(approx.complete());
    for (int a = 0; a <= 20; ++a)
        for (int b = 0; b <= 20; ++b)
            EXPECT_NEAR(eval_pi2d(approx, -1 + 0.1 * a, -1 + 0.1 * b).value, 1.0, 1e-14);
}

TEST(Pi2DPC, FailedCellReported) {
    const Partition2D p{uniform_partition(Interval(-1, 1), 2), uniform_partition(Interval(-1, 1), 2)};
    auto f = [](double x, double y) { return x > 0 && y > 0 ? std::nan("") : 1.0; };
    const auto approx = build_pi2dpc(f, p, PadeOrder2D({2, 2}, {1, 1}), {8, 8});
    ASSERT_EQ(approx.failures.size(), 1u);
    EXPECT_EQ(approx.failures[0].cell, 3u);
    EXPECT_THROW(eval_pi2d(approx, 0.5, 0.5), CellBuildError);
}
