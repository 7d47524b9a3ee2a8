#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthospin/tensor_ops.hpp"

namespace orthospin {

// Perfect matching on 2n points. Point p < n is the top vertex (p+1)⁺, point n + x is (x+1)⁻.
class BrauerDiagram {
public:
    explicit BrauerDiagram(int n, std::vector<int> mate);

    static BrauerDiagram identity(int n);
    // 1-based generator indices, x < y.
    static BrauerDiagram transposition(int n, int x, int y);
    static BrauerDiagram bar(int n, int x, int y);
    // x⁻ joined to σ(x)⁺, σ given 0-based.
    static BrauerDiagram permutation(const std::vector<int>& sigma);

    int n() const noexcept { return n_; }
    int mate(int point) const { return mate_.at(point); }
    const std::vector<int>& mates() const noexcept { return mate_; }

    // Canonical sorted list of pairs (smaller point first).
    std::vector<std::pair<int, int>> pairs() const;

    // "1+:3+ 2+:2- 1-:3-"
    std::string to_string() const;
    static BrauerDiagram parse(int n, std::string_view text);

    friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
    friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
    int n_;
    std::vector<int> mate_;
};

struct DiagramProduct {
    BrauerDiagram diagram;
    int loops;
};

// d1·d2: top row of d1 glued to the bottom row of d2. θ^loops is left to the caller.
DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2);

// All (2n−1)!! diagrams.
std::vector<BrauerDiagram> all_diagrams(int n);

class BrauerElement {
public:
    explicit BrauerElement(int n) : n_(n) {}
    BrauerElement(const BrauerDiagram& d, double coeff = 1.0);

    int n() const noexcept { return n_; }
    const std::map<BrauerDiagram, double>& terms() const noexcept { return terms_; }
    void add(const BrauerDiagram& d, double coeff);

    friend bool operator==(const BrauerElement&, const BrauerElement&) = default;

private:
    int n_;
    std::map<BrauerDiagram, double> terms_;
};

BrauerElement element_multiply(const BrauerElement& a, const BrauerElement& b, double theta);

// One generator in a factorisation: kind 'T' or 'B' with 0-based sites x < y.
struct GeneratorStep {
    char kind;
    int x;
    int y;
};

// Word of generators whose loop-free product is d.
std::vector<GeneratorStep> generator_word(const BrauerDiagram& d);

// Matrix of d on (ℂ^θ)^{⊗n}: bars act as Q or P, transpositions as T.
Eigen::MatrixXd represent(const BrauerDiagram& d, int theta, Flavor flavor,
                          std::size_t cap = default_dense_cap());

struct HomomorphismReport {
    bool passed = true;
    std::size_t pairs_checked = 0;
    double max_residual = 0.0;
    std::optional<std::pair<BrauerDiagram, BrauerDiagram>> first_failure;
};

// samples == 0 means every pair of diagrams.
HomomorphismReport verify_homomorphism(int n, int theta, std::size_t samples, Flavor flavor,
                                       std::uint64_t seed = 0, double tolerance = 1e-12);

}  // namespace orthospin
