#include "orthospin/branching.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>
#include <random>
#include <string>

#include "orthospin/errors.hpp"
#include "orthospin/group_chars.hpp"
#include "orthospin/tableaux.hpp"

namespace orthospin {

bool in_lambda_rho(const LambdaRhoPair& pair, int theta) {
    return pair.k >= 0 && pair.lambda.size() + 2 * pair.k == pair.rho.size() &&
           fits_orthogonal(pair.lambda, theta) && pair.rho.length() <= theta;
}

namespace {

void require_in_lambda_rho(const LambdaRhoPair& pair, int theta) {
    if (theta < 2) throw DomainError("branching needs theta >= 2");
    if (!in_lambda_rho(pair, theta))
        throw DomainError("pair (" + pair.lambda.to_string() + ", " + std::to_string(pair.k) + ", " +
                          pair.rho.to_string() + ") is not in Lambda_n(theta)");
}

bool is_single_column(const Partition& p) { return p.empty() || p[0] == 1; }

int odd_parts(const Partition& p) {
    int c = 0;
    for (int v : p.parts()) c += v % 2;
    return c;
}

}  // namespace

LambdaRhoPair reduce_by_recurrence(const LambdaRhoPair& pair, int theta) {
    const int last = pair.rho[theta - 1];
    if (last == 0) return pair;
    std::vector<int> rows(theta);
    for (int i = 0; i < theta; ++i) rows[i] = pair.rho[i] - last;
    Partition rho(std::move(rows));
    Partition lambda = last % 2 == 1 ? column_flip(pair.lambda, theta) : pair.lambda;
    const int k = (rho.size() - lambda.size()) / 2;
    return {std::move(lambda), k, std::move(rho)};
}

bool is_positive_closed_form(const LambdaRhoPair& pair, int theta) {
    if (theta != 2 && theta != 3) throw DomainError("closed-form positivity is only known for theta 2 and 3");
    require_in_lambda_rho(pair, theta);
    const auto& lambda = pair.lambda;
    const auto& rho = pair.rho;
    if (theta == 2) {
        if (lambda.empty()) return rho[0] % 2 == 0 && rho[1] % 2 == 0;
        if (lambda == Partition{1, 1}) return rho[0] % 2 == 1 && rho[1] % 2 == 1;
        return lambda[0] <= rho[0] - rho[1];
    }
    if (is_single_column(lambda)) return odd_parts(rho) == lambda.length();
    const bool odd12 = rho[0] == rho[1] && rho[0] % 2 == 1;
    const bool odd23 = rho[1] == rho[2] && rho[1] % 2 == 1;
    const bool even12 = rho[0] == rho[1] && rho[0] % 2 == 0;
    const bool even23 = rho[1] == rho[2] && rho[1] % 2 == 0;
    if (lambda.length() == 1 && (odd12 || odd23)) return false;
    if (lambda.length() == 2 && lambda[1] == 1 && (even12 || even23)) return false;
    return lambda[0] <= rho[0] - rho[2];
}

BranchingValue b_coefficient(const LambdaRhoPair& pair, int theta) {
    require_in_lambda_rho(pair, theta);
    if (theta == 2) return {is_positive_closed_form(pair, 2) ? 1 : 0, BranchingSource::ClosedForm};
    if (theta >= 4 && is_single_column(pair.lambda))
        return {odd_parts(pair.rho) == pair.lambda.length() ? 1 : 0, BranchingSource::Okada};
    const LambdaRhoPair reduced = reduce_by_recurrence(pair, theta);
    if (reduced.k < 0) return {0, BranchingSource::Vanishing};
    if (reduced.rho.column(0) + reduced.rho.column(1) <= theta + 1)
        return {cell_branching(reduced.lambda, reduced.rho), BranchingSource::CellModule};
    return {std::nullopt, BranchingSource::Unknown};
}

std::vector<BranchingEntry> enumerate_Pn(int n, int theta, const PnOptions& options) {
    std::vector<BranchingEntry> out;
    std::vector<BranchingEntry> oracle;
    bool oracle_loaded = false;
    for (const auto& pair : enumerate_lambda_rho(n, theta)) {
        BranchingValue v = b_coefficient(pair, theta);
        std::int64_t b = 0;
        if (v.known()) {
            b = *v.value;
        } else {
            if (!options.allow_oracle)
                throw Unresolved("b unknown for (" + pair.lambda.to_string() + ", " + pair.rho.to_string() +
                                 ") at theta " + std::to_string(theta) + "; enable the spectral oracle");
            if (!oracle_loaded) {
                ExtractionOptions eo;
                eo.dense_cap = options.dense_cap;
                eo.seed = options.seed;
                oracle = spectral_extract_branching(n, theta, 0.61803398874989485, 0.41421356237309515, eo);
                oracle_loaded = true;
            }
            for (const auto& e : oracle)
                if (e.pair == pair) b = e.b;
        }
        if (b > 0) out.push_back({pair, b});
    }
    return out;
}

namespace {

// Candidates with equal (c(ρ), c(λ)+k(1−θ), 3-cycle eigenvalue) can never be told apart
// by the spectrum of H + μ·K3; they form one class.
struct Candidate {
    LambdaRhoPair pair;
    double weight;      // d^O_λ · d^S_ρ
    double reflection;  // χ_λ(reflection) · d^S_ρ
    int content_rho;
    int content_brauer;  // c(λ) + k(1−θ)
    int three_cycle;     // eigenvalue of the 3-cycle class sum on the ρ-isotypic part

    auto signature() const { return std::tuple(content_rho, content_brauer, three_cycle); }
};

int three_cycle_eigenvalue(const Partition& rho) {
    int sq = 0;
    for (int i = 0; i < rho.length(); ++i)
        for (int j = 0; j < rho[i]; ++j) sq += (j - i) * (j - i);
    const int n = rho.size();
    return sq - n * (n - 1) / 2;
}

// Unique non-negative integer b with Σ b_i (w_i ± t_i)/2 = (plus, minus), if any.
std::optional<std::vector<std::int64_t>> unique_solution(const std::vector<const Candidate*>& cs,
                                                         double plus, double minus) {
    std::vector<std::int64_t> cur(cs.size(), 0), found;
    int count = 0;
    std::function<void(std::size_t, double, double)> rec = [&](std::size_t i, double rp, double rm) {
        if (count > 1) return;
        if (i == cs.size()) {
            if (std::abs(rp) < 0.01 && std::abs(rm) < 0.01) {
                ++count;
                found = cur;
            }
            return;
        }
        const double wp = (cs[i]->weight + cs[i]->reflection) / 2;
        const double wm = (cs[i]->weight - cs[i]->reflection) / 2;
        for (std::int64_t b = 0; b * wp <= rp + 0.01 && b * wm <= rm + 0.01; ++b) {
            cur[i] = b;
            rec(i + 1, rp - b * wp, rm - b * wm);
        }
        cur[i] = 0;
    };
    rec(0, plus, minus);
    if (count == 1) return found;
    return std::nullopt;
}

}  // namespace

std::vector<BranchingEntry> spectral_extract_branching(int n, int theta, double L1, double L2,
                                                       const ExtractionOptions& options) {
    const TensorSpace space(theta, n, options.dense_cap);

    // reflection g = diag(1, …, 1, −1) is in O(θ) and preserves Q
    std::vector<double> reflection_eigs(theta, 1.0);
    reflection_eigs.back() = -1.0;

    std::map<std::tuple<int, int, int>, std::vector<Candidate>> classes;
    for (const auto& pair : enumerate_lambda_rho(n, theta)) {
        const double ds = to_double(dim_sn(pair.rho));
        Candidate c{pair,
                    to_double(dim_o(pair.lambda, theta)) * ds,
                    std::round(orthogonal_jacobi_trudi(pair.lambda, reflection_eigs)) * ds,
                    content_sum(pair.rho),
                    content_sum(pair.lambda) + pair.k * (1 - theta),
                    three_cycle_eigenvalue(pair.rho)};
        classes[c.signature()].push_back(std::move(c));
    }
    std::vector<std::vector<Candidate>> cls;
    for (auto& [sig, v] : classes) cls.push_back(std::move(v));

    Eigen::VectorXd reflect(static_cast<Eigen::Index>(space.dim()));
    for (std::size_t s = 0; s < space.dim(); ++s) {
        int flips = 0;
        for (int a : space.digits(s)) flips += a == theta - 1;
        reflect(static_cast<Eigen::Index>(s)) = flips % 2 ? -1.0 : 1.0;
    }
    const Eigen::MatrixXd k3 = three_cycle_sum(space);

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    double l1 = L1, l2 = L2, mu = 0.31830988618379067, nu = 0.07071067811865475;

    for (int attempt = 0; attempt <= options.max_resamples; ++attempt) {
        if (attempt > 0) {
            l1 = unif(rng);
            l2 = unif(rng);
            mu = unif(rng) / 2;
            nu = 0.05 + std::abs(unif(rng)) / 20;
        }
        // levels: (value, class index, sign)
        struct Level { double value; std::size_t cls; int sign; };
        std::vector<Level> levels;
        double scale = 1.0;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const auto& c = cls[i].front();
            const double base = -((l1 + l2) * c.content_rho - l2 * c.content_brauer) + mu * c.three_cycle;
            levels.push_back({base + nu, i, +1});
            levels.push_back({base - nu, i, -1});
            scale = std::max(scale, std::abs(base) + nu);
        }
        const double tol = 1e-8 * n * scale;
        std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.value < b.value; });
        bool collide = false;
        for (std::size_t i = 1; i < levels.size(); ++i)
            if (levels[i].value - levels[i - 1].value <= 4 * tol) collide = true;
        if (collide) continue;

        Eigen::MatrixXd m = -pair_sum(space, l1, l2, Flavor::Q) + mu * k3;
        m.diagonal() += nu * reflect;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd eig = solver.eigenvalues();

        std::vector<double> plus(cls.size(), 0.0), minus(cls.size(), 0.0);
        for (Eigen::Index i = 0; i < eig.size(); ++i) {
            auto it = std::lower_bound(levels.begin(), levels.end(), eig(i) - tol,
                                       [](const Level& l, double v) { return l.value < v; });
            if (it == levels.end() || std::abs(it->value - eig(i)) > tol)
                throw Unresolved("dense eigenvalue matches no (lambda, k, rho) candidate");
            (it->sign > 0 ? plus : minus)[it->cls] += 1.0;
        }

        std::vector<BranchingEntry> out;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (plus[i] == 0.0 && minus[i] == 0.0) continue;
            std::vector<const Candidate*> cs;
            for (const auto& c : cls[i]) cs.push_back(&c);
            auto sol = unique_solution(cs, plus[i], minus[i]);
            if (!sol)
                throw Unresolved("eigenspace cannot be split among structurally identical candidates");
            for (std::size_t j = 0; j < cs.size(); ++j)
                if ((*sol)[j] > 0) out.push_back({cs[j]->pair, (*sol)[j]});
        }
        std::sort(out.begin(), out.end(),
                  [](const BranchingEntry& a, const BranchingEntry& b) { return a.pair < b.pair; });
        return out;
    }
    throw Unresolved("eigenvalue collisions persisted after resampling; shrink n");
}

}  // namespace orthospin
