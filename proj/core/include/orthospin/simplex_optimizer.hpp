#pragma once

#include <functional>
#include <span>
#include <vector>

namespace orthospin {

// Maximiser of a permutation-symmetric function on the probability simplex.
struct SimplexOptions {
    int grid_n = 0;             // grid denominator; 0 picks a size by dimension
    double start_band = 1e-4;   // grid points this close to the grid max also seed ascent
    int max_starts = 64;
    double final_step = 1e-11;
    double tie_tol = 1e-8;      // values within this of the best are co-maximisers
    double merge_dist = 1e-6;   // sorted points closer than this are the same maximiser
};

struct SimplexCandidate {
    std::vector<double> x;  // weakly decreasing
    double value = 0.0;
};

struct SimplexOptimum {
    std::vector<SimplexCandidate> maximizers;  // best first
    double value = 0.0;
};

using SymmetricObjective = std::function<double(std::span<const double>)>;

int default_grid_n(int dim);

// Local pattern-search ascent from x (must lie on the simplex).
SimplexCandidate ascend(const SymmetricObjective& f, std::vector<double> x, double initial_step,
                        double final_step);

SimplexOptimum maximize_on_simplex(int dim, const SymmetricObjective& f, const SimplexOptions& options = {});

}  // namespace orthospin
