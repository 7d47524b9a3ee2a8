#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "orthospin/errors.hpp"
#include "orthospin/spectra.hpp"

using namespace orthospin;

namespace {

HamiltonianSpec make_spec(int theta, int n, double L1, double L2, double h = 0.0, Flavor f = Flavor::Q) {
    HamiltonianSpec s;
    s.theta = theta;
    s.n = n;
    s.L1 = L1;
    s.L2 = L2;
    s.h = h;
    s.flavor = f;
    return s;
}

std::vector<double> expand_lines(const std::vector<SpectralLine>& lines) {
    std::vector<double> out;
    for (const auto& l : lines)
        for (BigInt i = 0; i < l.multiplicity; ++i) out.push_back(l.eigenvalue);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(ConvertParameters, Examples) {
    const auto k = convert_parameters(XxzParams{4, 4}, 2);
    EXPECT_DOUBLE_EQ(k.L1, 2.0);
    EXPECT_DOUBLE_EQ(k.L2, 0.0);
    const auto j = convert_parameters(BlbqParams{0, std::log(16.0)}, 3);
    EXPECT_DOUBLE_EQ(j.L1, 0.0);
    EXPECT_DOUBLE_EQ(j.L2, std::log(16.0));
    EXPECT_EQ(j.flavor, Flavor::P);
    const auto c = convert_parameters(CanonicalParams{0.3, -0.2}, 5);
    EXPECT_DOUBLE_EQ(c.L1, 0.3);
    EXPECT_DOUBLE_EQ(c.L2, -0.2);
    EXPECT_THROW(convert_parameters(XxzParams{1, 1}, 3), DomainError);
    EXPECT_THROW(convert_parameters(BlbqParams{1, 1}, 2), DomainError);
}

TEST(ConvertParameters, ModelHamiltoniansDifferByTheReportedShift) {
    // spin 1: S·S = T − P and (S·S)² = P + 1 on each edge
    const TensorSpace two(3, 2);
    const Eigen::MatrixXd t = swap_operator(two, 0, 1);
    const Eigen::MatrixXd p = bar_operator(two, 0, 1, Flavor::P);
    const double J1 = 0.8, J2 = -1.3;
    const Eigen::MatrixXd ss = t - p;
    const Eigen::MatrixXd model = -(J1 * ss + J2 * ss * ss);
    const auto c = convert_parameters(BlbqParams{J1, J2}, 3);
    const Eigen::MatrixXd canonical = -(c.L1 * t + c.L2 * p);
    EXPECT_LT((model - canonical - c.constant_shift * Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BuildHamiltonian, TwoSiteSpectrum) {
    const double L1 = 0.9, L2 = -0.35;
    const auto e = dense_spectrum(make_spec(2, 2, L1, L2));
    std::vector<double> want{-L1 - 2 * L2, -L1, -L1, L1};
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(e(i), want[i], 1e-14);
    EXPECT_TRUE(build_hamiltonian_real(make_spec(3, 3, 0, 0)).isZero());
}

TEST(BuildHamiltonian, ValidatesInputs) {
    auto s = make_spec(2, 2, 1, 1, 0.5);
    s.field_matrix = Eigen::MatrixXcd::Identity(2, 2);
    EXPECT_THROW(build_hamiltonian(s), DomainError);
    EXPECT_THROW(build_hamiltonian(make_spec(2, 13, 1, 1)), CapExceeded);
}

TEST(DefaultFieldMatrix, SkewHermitianSpectrum) {
    for (int theta = 2; theta <= 5; ++theta) {
        const Eigen::MatrixXcd w = default_field_matrix(theta);
        EXPECT_LT((w + w.transpose()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_LT((w - w.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w);
        const auto spec = FieldDirection::standard(theta).spectrum();
        std::vector<double> want(spec.begin(), spec.end());
        std::sort(want.begin(), want.end());
        for (int i = 0; i < theta; ++i) EXPECT_NEAR(es.eigenvalues()(i), want[i], 1e-12);
    }
}

TEST(SpectralLines, TwoSites) {
    const double L1 = 0.4, L2 = 1.7;
    const auto lines = spectral_lines(2, 2, L1, L2);
    ASSERT_EQ(lines.size(), 3u);
    for (const auto& l : lines) {
        if (l.lambda == Partition{2}) {
            EXPECT_DOUBLE_EQ(l.eigenvalue, -L1);
            EXPECT_EQ(l.multiplicity, 2);
        } else if (l.lambda.empty()) {
            EXPECT_DOUBLE_EQ(l.eigenvalue, -(L1 + 2 * L2));
            EXPECT_EQ(l.multiplicity, 1);
        } else {
            EXPECT_DOUBLE_EQ(l.eigenvalue, L1);
            EXPECT_EQ(l.multiplicity, 1);
        }
    }
}

TEST(SpectralLines, DimerLineEigenvalue) {
    for (int theta : {2, 3})
        for (int n : {4, 6}) {
            const double L1 = 0.3, L2 = 0.8;
            const auto lines = spectral_lines(n, theta, L1, L2);
            const auto it = std::find_if(lines.begin(), lines.end(),
                                         [&](const auto& l) { return l.lambda.empty() && l.rho == Partition{n}; });
            ASSERT_NE(it, lines.end());
            EXPECT_NEAR(it->eigenvalue, -((L1 + L2) * n * (n - 1) / 2.0 - L2 * (n / 2.0) * (1 - theta)), 1e-12);
        }
}

TEST(SpectralLines, MatchDenseSpectrum) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int theta : {2, 3})
        for (int n = 2; n <= (theta == 2 ? 7 : 5); ++n) {
            const double L1 = u(rng), L2 = u(rng);
            const auto lines = expand_lines(spectral_lines(n, theta, L1, L2));
            const auto dense = dense_spectrum(make_spec(theta, n, L1, L2));
            ASSERT_EQ(lines.size(), static_cast<std::size_t>(dense.size()));
            for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_NEAR(lines[i], dense(i), 1e-9);
        }
}

TEST(PartitionFunction, ZeroCouplingGivesThetaToTheN) {
    EXPECT_DOUBLE_EQ(z_direct(make_spec(3, 4, 0, 0)), 81.0);
    EXPECT_NEAR(z_decomposed(6, 2, 0, 0), 64.0, 1e-12);
}

TEST(PartitionFunction, TwoSiteClosedForm) {
    const double want = std::exp(1.5) + 2 * std::exp(0.5) + std::exp(-0.5);
    EXPECT_NEAR(z_direct(make_spec(2, 2, 1, 1)), want, 1e-13);
    EXPECT_NEAR(z_decomposed(2, 2, 1, 1), want, 1e-13);
}

TEST(PartitionFunction, DirectMatchesDecomposed) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int theta : {2, 3})
        for (int n = 2; n <= 5; ++n)
            for (double h : {0.0, -1.0, 0.3}) {
                const double L1 = u(rng), L2 = u(rng);
                const double zd = z_direct(make_spec(theta, n, L1, L2, h));
                EXPECT_NEAR(z_decomposed(n, theta, L1, L2, h) / zd, 1.0, 1e-9) << theta << " " << n << " " << h;
            }
}

TEST(PartitionFunction, FlavoursAgreeForOddTheta) {
    const double a = z_direct(make_spec(3, 4, 0.7, -1.2, 0.0, Flavor::Q));
    const double b = z_direct(make_spec(3, 4, 0.7, -1.2, 0.0, Flavor::P));
    EXPECT_NEAR(a / b, 1.0, 1e-12);
}

TEST(CentralElements, ActAsContentsOnEigenspaces) {
    // Σ_{x<y} T acts as c(ρ); Σ_{x<y}(T − Q) as c(λ) + k(1−θ)
    for (int theta : {2, 3})
        for (int n = 2; n <= (theta == 2 ? 5 : 4); ++n) {
            const TensorSpace space(theta, n);
            const Eigen::MatrixXd sum_t = pair_sum(space, 1.0, 0.0, Flavor::Q);
            const Eigen::MatrixXd sum_tq = pair_sum(space, 1.0, -1.0, Flavor::Q);
            const double L1 = 0.731, L2 = 0.377;
            const auto lines = spectral_lines(n, theta, L1, L2);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian_real(make_spec(theta, n, L1, L2)));
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                const auto it = std::find_if(lines.begin(), lines.end(), [&](const auto& l) {
                    return std::abs(l.eigenvalue - es.eigenvalues()(i)) < 1e-9;
                });
                ASSERT_NE(it, lines.end());
                const Eigen::VectorXd v = es.eigenvectors().col(i);
                EXPECT_LT((sum_t * v - content_sum(it->rho) * v).norm(), 1e-9);
                const double lam = content_sum(it->lambda) + it->k * (1 - theta);
                EXPECT_LT((sum_tq * v - lam * v).norm(), 1e-9);
            }
        }
}

TEST(TotalSpin, DenseMatchesCharacters) {
    for (int theta : {2, 3})
        for (int n = 2; n <= 6; ++n) {
            const auto t = total_spin_observable(n, theta, 0.9, -0.6, 1.3);
            EXPECT_NEAR(t.dense, t.characters, 1e-9 * std::abs(t.dense));
        }
    const auto zero = total_spin_observable(4, 3, 1.0, 1.0, 0.0);
    EXPECT_NEAR(zero.characters, 1.0, 1e-15);
    EXPECT_NEAR(zero.dense, 1.0, 1e-12);
}

TEST(TotalSpin, Limits) {
    EXPECT_NEAR(total_spin_limit(2, 2.0, 0.5), 1.5430806348152437, 1e-15);
    EXPECT_DOUBLE_EQ(total_spin_limit(3, 1.0, 0.0), 1.0);
    EXPECT_NEAR(total_spin_limit(3, 1.0, 1e-9), 1.0, 1e-15);
    EXPECT_THROW(total_spin_limit(4, 1.0, 0.1), DomainError);
}

TEST(GroundStates, DimerTwoSites) {
    const auto v = dimer_ground_state(2, 2);
    EXPECT_EQ(v, (Eigen::VectorXd(4) << 1, 0, 0, 1).finished());
    EXPECT_THROW(dimer_ground_state(3, 2), DomainError);
}

TEST(GroundStates, DimerIsGroundState) {
    for (auto [theta, n] : {std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 4}})
        for (Flavor f : {Flavor::Q, Flavor::P}) {
            if (theta == 2 && f == Flavor::P) continue;
            const auto spec = make_spec(theta, n, 1, 1, 0.0, f);
            const Eigen::MatrixXd h = build_hamiltonian_real(spec);
            const double e0 = dense_spectrum(spec)(0);
            const Eigen::VectorXd v = dimer_ground_state(n, theta, f);
            EXPECT_LT((h * v - e0 * v).norm() / v.norm(), 1e-10);
        }
}

TEST(GroundStates, IsingProductStates) {
    for (int n : {3, 4}) {
        const auto [plus, minus] = ising_product_states(n);
        const TensorSpace space(2, n);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                const Eigen::MatrixXcd q = bar_operator(space, x, y, Flavor::Q).cast<std::complex<double>>();
                const Eigen::MatrixXcd t = swap_operator(space, x, y).cast<std::complex<double>>();
                EXPECT_EQ((q * plus).cwiseAbs().maxCoeff(), 0.0);
                EXPECT_EQ((q * minus).cwiseAbs().maxCoeff(), 0.0);
                EXPECT_EQ((t * plus - plus).cwiseAbs().maxCoeff(), 0.0);
                EXPECT_EQ((t * minus - minus).cwiseAbs().maxCoeff(), 0.0);
            }
    }
}
