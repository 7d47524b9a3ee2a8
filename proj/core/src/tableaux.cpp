#include "orthospin/tableaux.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "orthospin/errors.hpp"

namespace orthospin {

BigInt dim_sn(const Partition& rho) {
    const int n = rho.size();
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt hooks = 1;
    const Partition t = transpose(rho);
    for (int i = 0; i < rho.length(); ++i)
        for (int j = 0; j < rho[i]; ++j) hooks *= (rho[i] - j) + (t[j] - i) - 1;
    return num / hooks;
}

namespace {

// Fills the skew shape ρ/λ in reading order (rows top to bottom, right to left)
// keeping rows weakly increasing, columns strict, and the reading word a lattice word.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& pi, const Partition& rho)
        : lambda_(lambda), pi_(pi), rho_(rho), counts_(pi.length() + 1, 0) {
        for (int i = 0; i < rho.length(); ++i)
            for (int j = rho[i] - 1; j >= lambda[i]; --j) cells_.push_back({i, j});
        grid_.assign(rho.length(), std::vector<int>(rho.empty() ? 0 : rho[0], 0));
    }

    std::int64_t count() { return place(0); }

private:
    struct Cell { int row, col; };

    std::int64_t place(std::size_t idx) {
        if (idx == cells_.size()) return 1;
        const auto [r, c] = cells_[idx];
        int hi = pi_.length();
        if (c + 1 < rho_[r]) hi = std::min(hi, grid_[r][c + 1]);
        // an entry in row r of an LR tableau is at most r+1
        hi = std::min(hi, r + 1);
        int lo = 1;
        if (r > 0 && c >= lambda_[r - 1]) lo = grid_[r - 1][c] + 1;
        std::int64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (counts_[v] >= pi_[v - 1]) continue;
            if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
            ++counts_[v];
            grid_[r][c] = v;
            total += place(idx + 1);
            --counts_[v];
        }
        grid_[r][c] = 0;
        return total;
    }

    const Partition& lambda_;
    const Partition& pi_;
    const Partition& rho_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
};

using LrKey = std::tuple<Partition, Partition, Partition>;

struct LrCache {
    std::shared_mutex mutex;
    std::map<LrKey, std::int64_t> values;
};

LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& pi, const Partition& rho) {
    if (lambda.size() + pi.size() != rho.size()) return 0;
    if (!is_contained(lambda, rho) || !is_contained(pi, rho)) return 0;
    if (pi.empty()) return lambda == rho ? 1 : 0;
    if (lambda.empty()) return pi == rho ? 1 : 0;

    LrKey key{lambda, pi, rho};
    auto& cache = lr_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
    }
    const std::int64_t value = LrCounter(lambda, pi, rho).count();
    std::unique_lock lock(cache.mutex);
    cache.values.emplace(std::move(key), value);
    return value;
}

std::int64_t cell_branching(const Partition& lambda, const Partition& rho) {
    const int diff = rho.size() - lambda.size();
    if (diff < 0 || diff % 2 != 0)
        throw DomainError("cell_branching needs |rho| - |lambda| even and non-negative");
    if (!is_contained(lambda, rho)) return 0;
    std::int64_t total = 0;
    for (const auto& pi : enumerate_even_partitions(diff, rho.length()))
        total += lr_coefficient(lambda, pi, rho);
    return total;
}

}  // namespace orthospin
