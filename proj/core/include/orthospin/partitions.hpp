#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace orthospin {

// Integer partition, parts weakly decreasing with trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // i-th part, 0-based; zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    // Length of the i-th column, 0-based.
    int column(std::size_t i) const noexcept;

    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// (λ, k, ρ) with |λ| + 2k = |ρ|.
struct LambdaRhoPair {
    Partition lambda;
    int k = 0;
    Partition rho;

    int n() const noexcept { return rho.size(); }
    friend bool operator==(const LambdaRhoPair&, const LambdaRhoPair&) = default;
    friend auto operator<=>(const LambdaRhoPair&, const LambdaRhoPair&) = default;
};

// All partitions of n with at most max_parts parts, reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int max_parts);

// Partitions of m with all parts even.
std::vector<Partition> enumerate_even_partitions(int m, int max_parts);

int content_sum(const Partition& p);
Partition transpose(const Partition& p);

// Replace the first column length c by θ − c. Needs λ₁ᵀ + λ₂ᵀ ≤ θ.
Partition column_flip(const Partition& p, int theta);

// λ₁ᵀ + λ₂ᵀ ≤ θ, the labelling condition for O(θ) irreducibles.
bool fits_orthogonal(const Partition& p, int theta);

// Λ_n(θ): λ ⊢ n−2k with λ₁ᵀ+λ₂ᵀ ≤ θ, and ρ ⊢ n with at most θ parts.
std::vector<LambdaRhoPair> enumerate_lambda_rho(int n, int theta);

bool is_contained(const Partition& inner, const Partition& outer);

}  // namespace orthospin
