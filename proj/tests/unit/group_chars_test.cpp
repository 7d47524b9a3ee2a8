#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <boost/math/special_functions/binomial.hpp>
#include <cmath>

#include "orthospin/errors.hpp"
#include "orthospin/group_chars.hpp"
#include "orthospin/spectra.hpp"

using namespace orthospin;

namespace {

long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return static_cast<long>(std::llround(boost::math::binomial_coefficient<double>(n, k)));
}

// power sums tr g^j of e^{hW}
std::vector<double> power_sums(int theta, double h) {
    const Eigen::MatrixXcd g = (h * default_field_matrix(theta)).exp();
    std::vector<double> p(4);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(theta, theta);
    for (int j = 0; j < 4; ++j) {
        p[j] = m.trace().real();
        m = m * g;
    }
    return p;
}

}  // namespace

TEST(DimSo, Examples) {
    EXPECT_EQ(dim_so({}, 3), 1);
    EXPECT_EQ(dim_so({2}, 3), 5);
    EXPECT_EQ(dim_so({1}, 4), 4);
}

TEST(DimSo, SymmetricTracelessPowers) {
    // harmonic polynomials of degree a in θ variables
    for (int theta = 3; theta <= 7; ++theta)
        for (int a = 0; a <= 6; ++a)
            EXPECT_EQ(dim_o({a}, theta), binom(a + theta - 1, theta - 1) - binom(a + theta - 3, theta - 1))
                << "theta=" << theta << " a=" << a;
}

TEST(DimO, ExteriorPowers) {
    for (int theta = 2; theta <= 7; ++theta)
        for (int j = 0; j <= theta; ++j) {
            std::vector<int> col(j, 1);
            EXPECT_EQ(dim_o(Partition(col), theta), binom(theta, j)) << "theta=" << theta << " j=" << j;
        }
}

TEST(DimO, SmallGroups) {
    EXPECT_EQ(dim_o({1, 1}, 2), 1);
    for (int a = 1; a <= 6; ++a) EXPECT_EQ(dim_o({a}, 2), 2);
    // O(3): (a) and (a,1) both have dimension 2a+1
    for (int a = 1; a <= 5; ++a) EXPECT_EQ(dim_o({a, 1}, 3), 2 * a + 1);
    EXPECT_EQ(dim_o({2, 1}, 3), dim_so(column_flip({2, 1}, 3), 3));
}

TEST(DimSo, RankTwoWeylProducts) {
    // SO(4): (a+b+1)(a−b+1); SO(5): (2a+3)(2b+1)(a+b+2)(a−b+1)/6
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= a; ++b) {
            EXPECT_EQ(dim_so(Partition({a, b}), 4), (a + b + 1) * (a - b + 1));
            EXPECT_EQ(dim_so(Partition({a, b}), 5), (2 * a + 3) * (2 * b + 1) * (a + b + 2) * (a - b + 1) / 6);
        }
}

TEST(DimGl, Examples) {
    EXPECT_EQ(dim_gl({1}, 5), 5);
    EXPECT_EQ(dim_gl({2}, 2), 3);
    EXPECT_EQ(dim_gl({2, 1}, 3), 8);
}

TEST(DimGl, HookContent) {
    for (int theta = 1; theta <= 4; ++theta)
        for (int n = 0; n <= 7; ++n)
            for (const auto& p : enumerate_partitions(n, theta)) {
                // Π (θ + c) / Π hook
                double num = 1, den = 1;
                const Partition t = transpose(p);
                for (int i = 0; i < p.length(); ++i)
                    for (int j = 0; j < p[i]; ++j) {
                        num *= theta + j - i;
                        den *= (p[i] - j) + (t[j] - i) - 1;
                    }
                EXPECT_EQ(to_double(dim_gl(p, theta)), std::round(num / den)) << p;
            }
}

TEST(CharOField, Examples) {
    EXPECT_DOUBLE_EQ(char_o_field({}, 3, 0.7), 1.0);
    EXPECT_DOUBLE_EQ(char_o_field({4}, 2, 0.0), 2.0);
    const double e = std::exp(1.0);
    EXPECT_NEAR(char_o_field({2}, 3, 1.0), e * e + e + 1 + 1 / e + 1 / (e * e), 1e-12);
}

TEST(CharOField, MatchesTensorTraces) {
    for (int theta = 2; theta <= 5; ++theta)
        for (double h : {-0.8, 0.3, 1.1}) {
            const auto p = power_sums(theta, h);
            const double tr = p[1], tr2 = p[2], tr3 = p[3];
            const double tol = 1e-10 * std::max(1.0, tr * tr * tr);
            EXPECT_NEAR(char_o_field({1}, theta, h), tr, tol);
            EXPECT_NEAR(char_o_field({2}, theta, h), (tr * tr + tr2) / 2 - 1, tol);
            EXPECT_NEAR(char_o_field({1, 1}, theta, h), (tr * tr - tr2) / 2, tol);
            const double h3 = (tr * tr * tr + 3 * tr * tr2 + 2 * tr3) / 6;
            EXPECT_NEAR(char_o_field({3}, theta, h), h3 - tr, tol) << "theta=" << theta;
        }
}

TEST(CharOField, HZeroGivesDimension) {
    for (int theta = 2; theta <= 5; ++theta)
        for (int n = 0; n <= 6; ++n)
            for (const auto& p : enumerate_partitions(n, theta))
                if (fits_orthogonal(p, theta))
                    EXPECT_NEAR(char_o_field(p, theta, 0.0), to_double(dim_o(p, theta)), 1e-9) << p;
}

TEST(CharRatioO, Examples) {
    EXPECT_DOUBLE_EQ(char_ratio_o({3, 1}, 3, 0.0), 1.0);
    EXPECT_NEAR(char_ratio_o({3}, 2, 0.2), std::cosh(0.6), 1e-14);
    EXPECT_NEAR(char_ratio_o({5000}, 3, 1e-4), std::sinh(0.5) / 0.5, 1e-3);
}

TEST(CharRatioO, AgreesWithCharacterOverDimension) {
    for (int theta : {2, 3})
        for (const Partition& p : {Partition{1}, Partition{2}, Partition{3}, Partition{1, 1}, Partition{2, 1}})
            if (fits_orthogonal(p, theta))
                EXPECT_NEAR(char_ratio_o(p, theta, 0.4), char_o_field(p, theta, 0.4) / to_double(dim_o(p, theta)), 1e-12)
                    << p << " theta=" << theta;
}

TEST(FieldDirection, Spectrum) {
    const FieldDirection d(5, {2.0, 1.0});
    EXPECT_EQ(d.spectrum().size(), 5u);
    EXPECT_THROW(FieldDirection(4, {1.0}), DomainError);
}
