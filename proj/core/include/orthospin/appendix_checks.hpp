#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "orthospin/interval.hpp"

namespace orthospin {

// w(z) = 3/2 + log(z)(1+5z)/(4(1−z)) + log(−z log z / D(z)), D(z) = 3(1−z) + (1+z)log z.
Interval w_of_z(const Interval& z);
double w_of_z(double z);
std::complex<double> w_of_z(std::complex<double> z);
std::complex<double> w_prime(std::complex<double> z);

Interval inner_denominator(const Interval& z);  // D(z)

struct CertifyReport {
    bool certified = false;
    long leaves = 0;
    int max_depth = 0;
    std::optional<Interval> witness;  // first leaf that failed at the depth limit
};

// Adaptive bisection of [a, b] until every leaf has an enclosure with lo > 0.
// Leaves whose enclosure raises DomainError are split further.
CertifyReport certify_positive(const std::function<Interval(const Interval&)>& f, double a, double b,
                               int max_depth = 40);
CertifyReport certify_positive(double a, double b, int max_depth = 40);

// Enclosure of the zero of D in (0, 1) by interval bisection.
Interval inner_denominator_root(double width = 1e-12);

struct WindingReport {
    std::complex<double> estimate;
    std::optional<long> verified;  // nearest integer when within 1e-3
};

// (1/2πi)∮ f'/f over z = c + R e^{iπt}, t ∈ [−1, 1], by tanh-sinh with nodes k = −n..n.
WindingReport winding_zero_count(const std::function<std::complex<double>(std::complex<double>)>& log_derivative,
                                 std::complex<double> center, double radius, double h, int n);
WindingReport winding_zero_count(std::complex<double> center, double radius, double h, int n);

// The dyadic interval on which w is certified positive.
inline constexpr double kCertifyLo = 81714053.0 / 1073741824.0;
inline constexpr double kCertifyHi = 1013243800.0 / 1073741824.0;

// Antidiagonal sign matrix with entries (−1)^{S−i} at (i, θ−1−i), S = (θ−1)/2.
Eigen::MatrixXd target_sign_matrix(int theta);

struct PsiResult {
    bool obstructed = false;
    Eigen::MatrixXcd psi;          // empty when obstructed
    double symmetry_defect = 0.0;  // ‖M − Mᵀ‖_max, non-zero certifies the obstruction
    double psi_residual = 0.0;     // ‖ψψᵀ − M‖_max
    double unitarity_residual = 0.0;
};

// Unitary ψ with ψψᵀ = M built from 2×2 blocks on index pairs (i, θ−1−i).
PsiResult construct_psi(int theta);

struct EquivalenceReport {
    bool obstructed = false;
    double symmetry_defect = 0.0;
    double psi_residual = 0.0;
    double conjugation_residual = 0.0;  // ‖(ψ⊗ψ) Q (ψ⊗ψ)† − P‖_max
    double spectrum_residual = 0.0;     // Q vs P flavour spectra at n sites
};

EquivalenceReport verify_pq_equivalence(int theta, int n, double L1 = 1.0, double L2 = 0.7);

}  // namespace orthospin
