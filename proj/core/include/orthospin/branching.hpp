#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orthospin/partitions.hpp"
#include "orthospin/tensor_ops.hpp"

namespace orthospin {

enum class BranchingSource {
    ClosedForm,   // θ = 2 indicator
    Vanishing,    // reduced pair leaves Λ (|λ*| > |ρ*|)
    Okada,        // λ = (1^j): 1 iff ρ has exactly j odd parts
    CellModule,   // b = b̃ on the reduced pair
    Spectral,     // dense spectral extraction
    Unknown       // θ ≥ 4 outside the rules above
};

struct BranchingValue {
    std::optional<std::int64_t> value;
    BranchingSource source = BranchingSource::Unknown;

    bool known() const noexcept { return value.has_value(); }
};

struct BranchingEntry {
    LambdaRhoPair pair;
    std::int64_t b = 0;
};

// True iff (λ, k, ρ) lies in Λ_n(θ).
bool in_lambda_rho(const LambdaRhoPair& pair, int theta);

// Strip ρ_θ from every row of ρ; flip λ when ρ_θ is odd. k of the result may be
// negative, meaning the reduced pair left Λ and b vanishes.
LambdaRhoPair reduce_by_recurrence(const LambdaRhoPair& pair, int theta);

BranchingValue b_coefficient(const LambdaRhoPair& pair, int theta);

// Positivity predicate for θ ∈ {2, 3} including all exceptional shapes.
bool is_positive_closed_form(const LambdaRhoPair& pair, int theta);

struct PnOptions {
    bool allow_oracle = false;
    std::size_t dense_cap = default_dense_cap();
    std::uint64_t seed = 0;
};

// P_n(θ): pairs with b > 0. Throws Unresolved when a value is unknown and the oracle is off.
std::vector<BranchingEntry> enumerate_Pn(int n, int theta, const PnOptions& options = {});

struct ExtractionOptions {
    std::size_t dense_cap = default_dense_cap();
    int max_resamples = 10;
    std::uint64_t seed = 0;
};

// Reads b off the dense spectrum of H(L1, L2) + μ·(3-cycle class sum) by matching
// eigenspace dimensions to d^O_λ · d^S_ρ. Returns only pairs with b > 0.
std::vector<BranchingEntry> spectral_extract_branching(int n, int theta, double L1, double L2,
                                                       const ExtractionOptions& options = {});

}  // namespace orthospin
