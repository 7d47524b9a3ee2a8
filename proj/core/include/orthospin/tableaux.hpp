#pragma once

#include <cstdint>

#include "orthospin/bigint.hpp"
#include "orthospin/partitions.hpp"

namespace orthospin {

// Number of standard Young tableaux of shape ρ (hook length formula).
BigInt dim_sn(const Partition& rho);

// Littlewood–Richardson coefficient c^ρ_{λ,π}: LR skew tableaux of shape ρ/λ and weight π.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& pi, const Partition& rho);

// Σ over even π ⊢ |ρ|−|λ| of c^ρ_{λ,π}. Independent of θ.
std::int64_t cell_branching(const Partition& lambda, const Partition& rho);

}  // namespace orthospin
