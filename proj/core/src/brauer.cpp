#include "orthospin/brauer.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "orthospin/errors.hpp"

namespace orthospin {

BrauerDiagram::BrauerDiagram(int n, std::vector<int> mate) : n_(n), mate_(std::move(mate)) {
    if (n < 0 || static_cast<int>(mate_.size()) != 2 * n) throw DomainError("diagram needs 2n endpoints");
    for (int p = 0; p < 2 * n; ++p) {
        const int q = mate_[p];
        if (q < 0 || q >= 2 * n || q == p || mate_[q] != p) throw DomainError("diagram is not a perfect matching");
    }
}

BrauerDiagram BrauerDiagram::identity(int n) {
    std::vector<int> m(2 * n);
    for (int x = 0; x < n; ++x) {
        m[x] = n + x;
        m[n + x] = x;
    }
    return BrauerDiagram(n, std::move(m));
}

namespace {

void check_generator(int n, int x, int y) {
    if (x < 1 || y > n || x >= y) throw DomainError("generator indices need 1 <= x < y <= n");
}

}  // namespace

BrauerDiagram BrauerDiagram::transposition(int n, int x, int y) {
    check_generator(n, x, y);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::swap(sigma[x - 1], sigma[y - 1]);
    return permutation(sigma);
}

BrauerDiagram BrauerDiagram::bar(int n, int x, int y) {
    check_generator(n, x, y);
    auto m = identity(n).mate_;
    --x, --y;
    m[x] = y, m[y] = x;
    m[n + x] = n + y, m[n + y] = n + x;
    return BrauerDiagram(n, std::move(m));
}

BrauerDiagram BrauerDiagram::permutation(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> m(2 * n, -1);
    for (int x = 0; x < n; ++x) {
        m[n + x] = sigma[x];
        m[sigma[x]] = n + x;
    }
    return BrauerDiagram(n, std::move(m));
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < 2 * n_; ++p)
        if (p < mate_[p]) out.emplace_back(p, mate_[p]);
    return out;
}

std::string BrauerDiagram::to_string() const {
    auto label = [&](int p) { return p < n_ ? std::to_string(p + 1) + "+" : std::to_string(p - n_ + 1) + "-"; };
    std::string s;
    for (auto [p, q] : pairs()) {
        if (!s.empty()) s += ' ';
        s += label(p) + ":" + label(q);
    }
    return s;
}

BrauerDiagram BrauerDiagram::parse(int n, std::string_view text) {
    auto point = [&](std::string_view tok) {
        if (tok.size() < 2) throw DomainError("bad diagram point");
        const char side = tok.back();
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size() - 1, v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() - 1 || v < 1 || v > n)
            throw DomainError("bad diagram point: " + std::string(tok));
        if (side == '+') return v - 1;
        if (side == '-') return n + v - 1;
        throw DomainError("diagram point must end in + or -");
    };
    std::vector<int> m(2 * n, -1);
    while (!text.empty()) {
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        if (text.empty()) break;
        auto end = text.find(' ');
        auto tok = text.substr(0, end);
        auto colon = tok.find(':');
        if (colon == std::string_view::npos) throw DomainError("diagram pair needs ':'");
        const int p = point(tok.substr(0, colon));
        const int q = point(tok.substr(colon + 1));
        if (m[p] != -1 || m[q] != -1) throw DomainError("diagram point used twice");
        m[p] = q, m[q] = p;
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end);
    }
    return BrauerDiagram(n, std::move(m));
}

DiagramProduct multiply(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    if (d1.n() != d2.n()) throw DomainError("diagram sizes differ");
    const int n = d1.n();
    // Stacked graph: d1 below, d2 above. Outer points: d1 bottoms (n..2n−1) and d2 tops (0..n−1).
    // A middle vertex x is d1's top x and d2's bottom n+x.
    std::vector<int> result(2 * n, -1);
    std::vector<char> middle_seen(n, 0);

    // Follow from an outer point until another outer point; returns the result label.
    auto walk = [&](bool in_d1, int point) {
        while (true) {
            if (in_d1) {
                const int q = d1.mate(point);
                if (q >= n) return q;  // d1 bottom: outer
                middle_seen[q] = 1;
                in_d1 = false;
                point = n + q;
            } else {
                const int q = d2.mate(point);
                if (q < n) return q;  // d2 top: outer
                middle_seen[q - n] = 1;
                in_d1 = true;
                point = q - n;
            }
        }
    };

    for (int p = 0; p < 2 * n; ++p) {
        if (result[p] != -1) continue;
        const int q = p < n ? walk(false, p) : walk(true, p);
        result[p] = q;
        result[q] = p;
    }
    int loops = 0;
    for (int x = 0; x < n; ++x) {
        if (middle_seen[x]) continue;
        ++loops;
        int cur = x;
        do {
            middle_seen[cur] = 1;
            cur = d1.mate(cur);           // d1 top to d1 top
            middle_seen[cur] = 1;
            cur = d2.mate(n + cur) - n;   // d2 bottom to d2 bottom
        } while (cur != x);
    }
    return {BrauerDiagram(n, std::move(result)), loops};
}

std::vector<BrauerDiagram> all_diagrams(int n) {
    std::vector<BrauerDiagram> out;
    std::vector<int> m(2 * n, -1);
    auto rec = [&](auto&& self) -> void {
        int p = 0;
        while (p < 2 * n && m[p] != -1) ++p;
        if (p == 2 * n) {
            out.emplace_back(n, m);
            return;
        }
        for (int q = p + 1; q < 2 * n; ++q) {
            if (m[q] != -1) continue;
            m[p] = q, m[q] = p;
            self(self);
            m[p] = -1, m[q] = -1;
        }
    };
    rec(rec);
    return out;
}

BrauerElement::BrauerElement(const BrauerDiagram& d, double coeff) : n_(d.n()) { add(d, coeff); }

void BrauerElement::add(const BrauerDiagram& d, double coeff) {
    if (d.n() != n_) throw DomainError("diagram size differs from element size");
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

BrauerElement element_multiply(const BrauerElement& a, const BrauerElement& b, double theta) {
    if (a.n() != b.n()) throw DomainError("element sizes differ");
    BrauerElement out(a.n());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [d, loops] = multiply(da, db);
            double c = ca * cb;
            for (int i = 0; i < loops; ++i) c *= theta;
            out.add(d, c);
        }
    return out;
}

namespace {

// Adjacent transpositions s_{i1}, s_{i2}, … with perm(σ) = perm(s_{i1})·perm(s_{i2})···
std::vector<GeneratorStep> permutation_word(std::vector<int> sigma) {
    std::vector<GeneratorStep> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
            if (sigma[i] > sigma[i + 1]) {
                std::swap(sigma[i], sigma[i + 1]);
                word.push_back({'T', static_cast<int>(i), static_cast<int>(i + 1)});
                changed = true;
            }
    }
    return word;
}

}  // namespace

std::vector<GeneratorStep> generator_word(const BrauerDiagram& d) {
    const int n = d.n();
    // d = perm(α) · E · perm(β), E = bars (0,1), (2,3), … on both rows.
    std::vector<int> alpha(n, -1), beta(n, -1);
    int slot = 0;
    for (int p = n; p < 2 * n; ++p) {
        const int q = d.mate(p);
        if (q > p) {
            alpha[p - n] = slot++;
            alpha[q - n] = slot++;
        }
    }
    const int k = slot / 2;
    slot = 0;
    for (int p = 0; p < n; ++p) {
        const int q = d.mate(p);
        if (q < n && q > p) {
            beta[slot++] = p;
            beta[slot++] = q;
        }
    }
    slot = 2 * k;
    for (int p = n; p < 2 * n; ++p) {
        const int q = d.mate(p);
        if (q < n) {
            alpha[p - n] = slot;
            beta[slot] = q;
            ++slot;
        }
    }
    std::vector<GeneratorStep> word = permutation_word(alpha);
    for (int i = 0; i < k; ++i) word.push_back({'B', 2 * i, 2 * i + 1});
    for (const auto& s : permutation_word(beta)) word.push_back(s);
    return word;
}

Eigen::MatrixXd represent(const BrauerDiagram& d, int theta, Flavor flavor, std::size_t cap) {
    const TensorSpace space(theta, d.n(), cap);
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    for (const auto& step : generator_word(d)) {
        const Eigen::MatrixXd g = step.kind == 'T' ? swap_operator(space, step.x, step.y)
                                                   : bar_operator(space, step.x, step.y, flavor);
        m = m * g;
    }
    return m;
}

HomomorphismReport verify_homomorphism(int n, int theta, std::size_t samples, Flavor flavor,
                                       std::uint64_t seed, double tolerance) {
    const auto diagrams = all_diagrams(n);
    std::vector<Eigen::MatrixXd> mats;
    mats.reserve(diagrams.size());
    for (const auto& d : diagrams) mats.push_back(represent(d, theta, flavor));
    auto index_of = [&](const BrauerDiagram& d) {
        return static_cast<std::size_t>(std::lower_bound(diagrams.begin(), diagrams.end(), d) - diagrams.begin());
    };
    std::vector<BrauerDiagram> sorted = diagrams;
    std::sort(sorted.begin(), sorted.end());
    const bool is_sorted = sorted == diagrams;

    HomomorphismReport report;
    auto check = [&](std::size_t i, std::size_t j) {
        auto [prod, loops] = multiply(diagrams[i], diagrams[j]);
        std::size_t kidx = 0;
        if (is_sorted) {
            kidx = index_of(prod);
        } else {
            kidx = static_cast<std::size_t>(std::find(diagrams.begin(), diagrams.end(), prod) - diagrams.begin());
        }
        double scale = 1.0;
        for (int l = 0; l < loops; ++l) scale *= theta;
        const double r = (mats[i] * mats[j] - scale * mats[kidx]).cwiseAbs().maxCoeff();
        ++report.pairs_checked;
        report.max_residual = std::max(report.max_residual, r);
        if (r > tolerance && report.passed) {
            report.passed = false;
            report.first_failure = std::make_pair(diagrams[i], diagrams[j]);
        }
    };
    if (samples == 0) {
        for (std::size_t i = 0; i < diagrams.size(); ++i)
            for (std::size_t j = 0; j < diagrams.size(); ++j) check(i, j);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
        for (std::size_t s = 0; s < samples; ++s) check(pick(rng), pick(rng));
    }
    return report;
}

}  // namespace orthospin
