#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "orthospin/bigint.hpp"
#include "orthospin/branching.hpp"
#include "orthospin/group_chars.hpp"
#include "orthospin/partitions.hpp"
#include "orthospin/tensor_ops.hpp"

namespace orthospin {

// H = −Σ_{x<y} [(K1+K2)/4 T + (K1−K2)/4 Q] + (K1/4)·#edges for spin ½.
struct XxzParams { double K1, K2; };
// H = −Σ_{x<y} [J1 T + (J2−J1) P] − J2·#edges for spin 1.
struct BlbqParams { double J1, J2; };
struct CanonicalParams { double L1, L2; };

using ModelParams = std::variant<CanonicalParams, XxzParams, BlbqParams>;

struct ConvertedParams {
    double L1;
    double L2;
    double constant_shift;  // per edge: H_model = H_canonical + shift·#edges
    Flavor flavor;
};

ConvertedParams convert_parameters(const ModelParams& params, int theta);

struct HamiltonianSpec {
    int theta = 2;
    int n = 2;
    double L1 = 0.0;
    double L2 = 0.0;
    // Field strength. The field term is −n·h·Σ_x W_x, so that e^{−H/n} carries e^{hΣW}.
    double h = 0.0;
    Flavor flavor = Flavor::Q;
    std::optional<Eigen::MatrixXcd> field_matrix;  // default_field_matrix(θ) when empty
    std::size_t dense_cap = default_dense_cap();
};

// θ=2: [[0, i], [−i, 0]]; θ ≥ 3: the spin-(θ−1)/2 y-generator in the S^z basis.
Eigen::MatrixXcd default_field_matrix(int theta);

// e^{tW} for Hermitian W.
Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& w, double t);

Eigen::MatrixXd build_hamiltonian_real(const HamiltonianSpec& spec);  // requires h = 0
Eigen::MatrixXcd build_hamiltonian(const HamiltonianSpec& spec);

// Sorted eigenvalues of the dense Hamiltonian.
Eigen::VectorXd dense_spectrum(const HamiltonianSpec& spec);

struct SpectralLine {
    Partition lambda;
    int k = 0;
    Partition rho;
    double eigenvalue = 0.0;
    BigInt multiplicity;
};

double line_eigenvalue(const LambdaRhoPair& pair, int theta, double L1, double L2);

std::vector<SpectralLine> spectral_lines(int n, int theta, double L1, double L2,
                                         const PnOptions& options = {});

// tr e^{−H/n} from the dense spectrum.
double z_direct(const HamiltonianSpec& spec);

// Σ_lines χ_λ(e^{hW}) · b · d^S_ρ · e^{−E/n}; d^O_λ in place of χ when h = 0.
double z_decomposed(int n, int theta, double L1, double L2, double h = 0.0);
double z_decomposed(int n, int theta, double L1, double L2, double h, const FieldDirection& dir);

struct TotalSpin {
    double dense;       // tr(e^{(h/n)ΣW} e^{−H/n}) / Z by dense diagonalisation
    double characters;  // the same from the character-weighted line sum
};

TotalSpin total_spin_observable(int n, int theta, double L1, double L2, double h,
                                std::size_t cap = default_dense_cap());

// Limit of the total-spin expectation: cosh(h y) for θ=2, sinh(h y)/(h y) for θ=3.
double total_spin_limit(int theta, double h, double y1star);

// Σ over pairings of ⊗ Σ_a |a,a⟩ (Q) or ⊗ Σ_a (−1)^a |a,−a⟩ (P).
Eigen::VectorXd dimer_ground_state(int n, int theta, Flavor flavor = Flavor::Q,
                                   std::size_t cap = default_dense_cap());

// ⊗(|½⟩ + i|−½⟩) and ⊗(|½⟩ − i|−½⟩) for θ = 2.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> ising_product_states(int n,
                                                                    std::size_t cap = default_dense_cap());

}  // namespace orthospin
