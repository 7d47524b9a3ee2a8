#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace orthospin {

// Which projector family represents the bar generators.
enum class Flavor { Q, P };

// Dense state-space cap, default 4096, overridable by ORTHO_SPIN_DENSE_CAP.
std::size_t default_dense_cap();

// (ℂ^θ)^{⊗n} with basis index Σ a_x θ^{n−1−x}; digit a ↔ spin value S − a, S = (θ−1)/2.
class TensorSpace {
public:
    TensorSpace(int theta, int n, std::size_t cap = default_dense_cap());

    int theta() const noexcept { return theta_; }
    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }

    std::vector<int> digits(std::size_t index) const;
    std::size_t index(const std::vector<int>& digits) const;

private:
    int theta_;
    int n_;
    std::size_t dim_;
};

// Σ_{x<y} (alpha T_xy + beta B_xy), B = Q or P.
Eigen::MatrixXd pair_sum(const TensorSpace& space, double alpha, double beta, Flavor flavor);

// Single T_xy or B_xy (0-based sites).
Eigen::MatrixXd swap_operator(const TensorSpace& space, int x, int y);
Eigen::MatrixXd bar_operator(const TensorSpace& space, int x, int y, Flavor flavor);

// Class sum of all 3-cycles in S_n acting by permuting tensor factors.
Eigen::MatrixXd three_cycle_sum(const TensorSpace& space);

// (U ⊗ … ⊗ U) v.
Eigen::VectorXcd apply_every_site(const TensorSpace& space, const Eigen::MatrixXcd& u,
                                  const Eigen::VectorXcd& v);

// Σ_x W_x.
Eigen::MatrixXcd site_sum(const TensorSpace& space, const Eigen::MatrixXcd& w);

}  // namespace orthospin
