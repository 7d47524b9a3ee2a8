#include <gtest/gtest.h>

#include <cmath>

#include "orthospin/errors.hpp"
#include "orthospin/free_energy.hpp"
#include "orthospin/simplex_optimizer.hpp"

using namespace orthospin;

namespace {

double symmetric_value(int theta, double L1, double L2) {
    return (L1 + L2) / (2.0 * theta) + std::log(static_cast<double>(theta));
}

SimplexPoint point(std::vector<double> x, double y1) {
    std::vector<double> y(x.size(), 0.0);
    y[0] = y1;
    return {std::move(x), std::move(y)};
}

}  // namespace

TEST(SimplexOptimizer, ConcaveObjectiveHasBarycentre) {
    auto f = [](std::span<const double> x) {
        double s = 0;
        for (double v : x)
            if (v > 0) s -= v * std::log(v);
        return s;
    };
    for (int dim = 2; dim <= 5; ++dim) {
        const auto opt = maximize_on_simplex(dim, f);
        ASSERT_EQ(opt.maximizers.size(), 1u);
        for (double v : opt.maximizers[0].x) EXPECT_NEAR(v, 1.0 / dim, 1e-9);
        EXPECT_NEAR(opt.value, std::log(dim), 1e-12);
    }
}

TEST(SimplexOptimizer, ConvexObjectiveHasVertex) {
    auto f = [](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    };
    const auto opt = maximize_on_simplex(4, f);
    ASSERT_EQ(opt.maximizers.size(), 1u);
    EXPECT_NEAR(opt.maximizers[0].x[0], 1.0, 1e-9);
    EXPECT_NEAR(opt.value, 1.0, 1e-9);
}

TEST(Phi, Values) {
    EXPECT_NEAR(phi(2, 0, 0, point({0.5, 0.5}, 0)), std::log(2.0), 1e-15);
    EXPECT_NEAR(phi(3, 1.2, -0.4, point({1.0 / 3, 1.0 / 3, 1.0 / 3}, 0)), symmetric_value(3, 1.2, -0.4), 1e-14);
    // vertex with full y
    EXPECT_NEAR(phi(2, 1.0, 0.5, point({1, 0}, 1)), 0.5 * (1.5 - 0.5), 1e-15);
}

TEST(Phi, RejectsPointsOffTheDomain) {
    EXPECT_THROW(phi(2, 1, 1, point({0.4, 0.6}, 0)), DomainError);
    EXPECT_THROW(phi(2, 1, 1, point({0.7, 0.7}, 0)), DomainError);
    EXPECT_THROW(phi(2, 1, 1, point({0.7, 0.3}, 0.5)), DomainError);
    EXPECT_THROW(phi(3, 1, 1, {{0.5, 0.3, 0.2}, {0, 0.1, 0}}), DomainError);
    EXPECT_THROW(phi(2, 1, 1, point({0.5, 0.5, 0.0}, 0)), DomainError);
}

TEST(InnerY, Cases) {
    auto a = inner_y(2.0, 0.5, 1.0);
    EXPECT_DOUBLE_EQ(a.y_lo, 0.25);
    EXPECT_DOUBLE_EQ(a.value, -0.0625 + 0.125);
    a = inner_y(0.1, 1.0, 0.4);
    EXPECT_DOUBLE_EQ(a.y_lo, 0.4);
    a = inner_y(-1.0, 0.0, 0.6);
    EXPECT_DOUBLE_EQ(a.y_lo, 0.6);
    EXPECT_DOUBLE_EQ(a.value, 0.18);
    a = inner_y(0.0, 0.0, 0.6);
    EXPECT_DOUBLE_EQ(a.y_lo, 0.0);
    EXPECT_DOUBLE_EQ(a.y_hi, 0.6);
    EXPECT_DOUBLE_EQ(a.value, 0.0);
}

TEST(MaximizePhi, DisorderedRegionIsConstantShape) {
    for (double K1 = -4.0; K1 <= 3.9; K1 += 0.65)
        for (double K2 = -4.0; K2 <= 3.9; K2 += 0.65) {
            const double L1 = (K1 + K2) / 4, L2 = (K1 - K2) / 4;
            EXPECT_NEAR(maximize_phi(2, L1, L2).value, symmetric_value(2, L1, L2), 1e-12) << K1 << " " << K2;
        }
}

TEST(MaximizePhi, NonNegativeL2GivesOneLargeCoordinate) {
    for (int theta = 2; theta <= 6; ++theta)
        for (double beta : {0.5 * beta_c(theta), 1.3 * beta_c(theta), 2.0 * beta_c(theta)}) {
            const auto m = maximize_phi(theta, 0.6 * beta, 0.4 * beta);
            ASSERT_FALSE(m.maximizers.empty());
            const auto& x = m.maximizers[0].point.x;
            for (int i = 2; i < theta; ++i) EXPECT_NEAR(x[i], x[1], 1e-8);
            if (x[0] > x[1] + 1e-6) EXPECT_NEAR(beta_of_xstar(theta, x[0]), beta, 1e-6 * beta);
        }
}

TEST(MaximizePhi, NotProvenForNegativeL2AtLargeTheta) {
    EXPECT_THROW(maximize_phi(4, 1.0, -0.1), NotProven);
    EXPECT_NO_THROW(maximize_phi(4, 1.0, 0.0));
    EXPECT_THROW(maximize_phi(4, 1.0, 0.2, 0.1), DomainError);
}

TEST(FreeEnergy, ModelValueCarriesTheShift) {
    const auto x = free_energy(2, XxzParams{2.0, 1.0});
    EXPECT_DOUBLE_EQ(x.shift, 0.5);
    EXPECT_NEAR(x.value, symmetric_value(2, 0.75, 0.25), 1e-12);
    EXPECT_DOUBLE_EQ(x.model_value, x.value - 0.25);
    const auto j = free_energy(3, BlbqParams{0.5, 1.0});
    EXPECT_DOUBLE_EQ(j.shift, -1.0);
    EXPECT_DOUBLE_EQ(j.model_value, j.value + 0.5);
}

TEST(CriticalValues, ClosedForms) {
    EXPECT_DOUBLE_EQ(beta_c(2), 2.0);
    EXPECT_NEAR(beta_c(3), std::log(16.0), 1e-15);
    EXPECT_NEAR(beta_c(4), 3 * std::log(3.0), 1e-14);
    EXPECT_NEAR(beta_of_xstar(2, 0.9), 1.25 * std::log(9.0), 1e-14);
    EXPECT_THROW(beta_of_xstar(3, 0.5), DomainError);
}

TEST(CriticalValues, JumpAtBetaC) {
    for (int theta = 3; theta <= 5; ++theta) {
        const double b = beta_c(theta);
        const auto below = maximize_phi(theta, b - 1e-4, 0.0);
        const auto above = maximize_phi(theta, b + 1e-4, 0.0);
        EXPECT_NEAR(below.maximizers[0].point.x[0], 1.0 / theta, 1e-9);
        EXPECT_NEAR(above.maximizers[0].point.x[0], 1.0 - 1.0 / theta, 1e-3);
    }
}

TEST(OneSided, DerivativesAtZeroField) {
    const auto sym = one_sided_derivatives(3, 0.0, 0.0);
    EXPECT_NEAR(sym.y1_up, 0.0, 1e-12);
    EXPECT_NEAR(sym.y1_down, 0.0, 1e-12);
    // L2 = 0: the y-optimum is the whole interval [0, x1 − x2]
    const auto xy = one_sided_derivatives(2, 3.0, 0.0);
    EXPECT_NEAR(xy.y1_down, 0.0, 1e-12);
    const auto m = maximize_phi(2, 3.0, 0.0);
    EXPECT_NEAR(xy.y1_up, m.maximizers[0].point.x[0] - m.maximizers[0].point.x[1], 1e-12);
    EXPECT_GT(xy.y1_up, 0.5);
}

TEST(OneSided, MatchesFieldFiniteDifference) {
    const double L1 = 3.0, L2 = 0.0;
    const double h = 1e-6;
    const double fd = (field_free_energy(2, L1, L2, h) - field_free_energy(2, L1, L2, 0.0)) / h;
    EXPECT_NEAR(fd, one_sided_derivatives(2, L1, L2).y1_up, 1e-5);
}

TEST(PhiJ, GradientMatchesFiniteDifferences) {
    const double J1 = 0.7, J2 = -1.9;
    for (auto [x1, x2] : {std::pair{0.2, 0.3}, std::pair{0.6, 0.1}, std::pair{0.33, 0.33}}) {
        const auto [g1, g2] = phi_j_gradient(J1, J2, x1, x2);
        const double e = 1e-6;
        const double f1 = (phi_j(J1, J2, x1 + e, x2) - phi_j(J1, J2, x1 - e, x2)) / (2 * e);
        const double f2 = (phi_j(J1, J2, x1, x2 + e) - phi_j(J1, J2, x1, x2 - e)) / (2 * e);
        EXPECT_NEAR(g1, f1, 1e-6);
        EXPECT_NEAR(g2, f2, 1e-6);
    }
    EXPECT_THROW(phi_j(1, 1, 0.5, 0.5), DomainError);
}

TEST(PhiJ, SymmetricPointIsCritical) {
    const auto [g1, g2] = phi_j_gradient(0.4, 1.1, 1.0 / 3, 1.0 / 3);
    EXPECT_NEAR(g1, 0.0, 1e-14);
    EXPECT_NEAR(g2, 0.0, 1e-14);
}

TEST(QuadraticAlpha, Wedges) {
    EXPECT_DOUBLE_EQ(quadratic_alpha(1.0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(quadratic_alpha(-1.0, -4.0), 0.8);
    EXPECT_DOUBLE_EQ(quadratic_alpha(-1.0, -2.0), 2.0 / 3.0);
    EXPECT_THROW(quadratic_alpha(-1.0, 0.0), DomainError);
}

TEST(DisorderedRegion, FollowsTheLocalStabilityLineAtLowJ2) {
    EXPECT_TRUE(in_disordered_region(0.749, -1.5));
    EXPECT_FALSE(in_disordered_region(0.751, -1.5));
    EXPECT_TRUE(in_disordered_region(0.0, 2.7));
    EXPECT_FALSE(in_disordered_region(0.0, 2.8));
    EXPECT_THROW(trace_curve_C(5), DomainError);
}

TEST(ClassifyPhase, SpinHalf) {
    EXPECT_EQ(classify_phase(2, XxzParams{2, 2}).phase, Phase::Disordered);
    EXPECT_EQ(classify_phase(2, XxzParams{6, 2}).phase, Phase::XY);
    EXPECT_EQ(classify_phase(2, XxzParams{2, 6}).phase, Phase::Ising);
    EXPECT_EQ(classify_phase(2, XxzParams{4, 2}).phase, Phase::Boundary);
    EXPECT_EQ(classify_phase(2, XxzParams{6, 6}).phase, Phase::Boundary);
}

TEST(ClassifyPhase, SpinOne) {
    EXPECT_EQ(classify_phase(3, BlbqParams{0, 2}).phase, Phase::Disordered);
    EXPECT_EQ(classify_phase(3, BlbqParams{0, 3}).phase, Phase::Nematic);
    const auto ferro = classify_phase(3, BlbqParams{2, -1});
    EXPECT_EQ(ferro.phase, Phase::Ferromagnetic);
    EXPECT_TRUE(ferro.conjectured);
    const auto fourth = classify_phase(3, BlbqParams{-3, -10});
    EXPECT_EQ(fourth.phase, Phase::FourthPhase);
    EXPECT_FALSE(fourth.conjectured);
    EXPECT_THROW(classify_phase(3, BlbqParams{0, -4}), NotProven);
}

TEST(ClassifyPhase, LargerTheta) {
    EXPECT_EQ(classify_phase(4, CanonicalParams{1.0, 0.5}).phase, Phase::Disordered);
    EXPECT_EQ(classify_phase(4, CanonicalParams{4.0, 0.5}).phase, Phase::Ordered);
    EXPECT_THROW(classify_phase(4, CanonicalParams{4.0, -0.5}), NotProven);
    EXPECT_EQ(to_string(Phase::FourthPhase), "fourth");
}
