#pragma once

#include <vector>

#include "orthospin/bigint.hpp"
#include "orthospin/partitions.hpp"

namespace orthospin {

// Positive half of the spectrum of a skew-symmetric W: r = ⌊θ/2⌋ weights, descending.
class FieldDirection {
public:
    FieldDirection(int theta, std::vector<double> weights);

    // (1) for θ = 2 and 3; spin-S y-generator weights (S, S−1, ...) for θ ≥ 4.
    static FieldDirection standard(int theta);

    int theta() const noexcept { return theta_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    // Full eigenvalue list of W: ±w_i, plus 0 when θ is odd.
    std::vector<double> spectrum() const;

private:
    int theta_;
    std::vector<double> weights_;
};

BigInt dim_so(const Partition& lambda, int theta);
BigInt dim_o(const Partition& lambda, int theta);
BigInt dim_gl(const Partition& rho, int theta);

// χ^{O(θ)}_λ(e^{hW}) for W with the given spectrum.
double char_o_field(const Partition& lambda, int theta, double h, const FieldDirection& dir);
double char_o_field(const Partition& lambda, int theta, double h);

// χ_λ(e^{(h/n)W}) / d_λ for θ ∈ {2, 3} and the standard direction.
double char_ratio_o(const Partition& lambda, int theta, double h_over_n);

// Orthogonal Jacobi–Trudi determinant det(h_{λi−i+j} − h_{λi−i−j}) in the given eigenvalues.
double orthogonal_jacobi_trudi(const Partition& lambda, const std::vector<double>& eigenvalues);

}  // namespace orthospin
