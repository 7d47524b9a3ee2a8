#include "orthospin/simplex_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "orthospin/errors.hpp"

namespace orthospin {

namespace {

struct Direction {
    std::vector<std::pair<int, double>> moves;
};

std::vector<Direction> make_directions(int dim) {
    std::vector<Direction> dirs;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j) dirs.push_back({{{i, 1.0}, {j, -1.0}}});
    // moves two coordinates together against a third; needed at ties of max/min
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            for (int k = i + 1; k < dim; ++k) {
                if (i == j || k == j) continue;
                dirs.push_back({{{i, 0.5}, {k, 0.5}, {j, -1.0}}});
                dirs.push_back({{{i, -0.5}, {k, -0.5}, {j, 1.0}}});
            }
    return dirs;
}

void sort_desc(std::vector<double>& x) { std::sort(x.begin(), x.end(), std::greater<>()); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Partitions of total into at most dim parts, padded with zeros.
void grid_points(int dim, int total, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (static_cast<int>(cur.size()) == dim) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int slots = dim - static_cast<int>(cur.size());
        for (int p = std::min(remaining, max_part); p >= 0; --p) {
            if (static_cast<long>(p) * slots < remaining) break;
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
}

}  // namespace

int default_grid_n(int dim) {
    switch (dim) {
        case 1: return 1;
        case 2: return 1000;
        case 3: return 600;
        case 4: return 200;
        case 5: return 80;
        case 6: return 50;
        default: return 30;
    }
}

SimplexCandidate ascend(const SymmetricObjective& f, std::vector<double> x, double initial_step,
                        double final_step) {
    const int dim = static_cast<int>(x.size());
    const auto dirs = make_directions(dim);
    double fx = f(x);
    std::vector<double> trial(x.size());
    for (double step = initial_step; step >= final_step;) {
        bool improved = false;
        for (const auto& d : dirs) {
            trial = x;
            bool feasible = true;
            for (auto [i, c] : d.moves) {
                trial[i] += step * c;
                if (trial[i] < 0.0) {
                    if (trial[i] < -1e-15) feasible = false;
                    trial[i] = 0.0;
                }
            }
            if (!feasible) continue;
            const double ft = f(trial);
            if (ft > fx) {
                x.swap(trial);
                fx = ft;
                improved = true;
            }
        }
        if (!improved) step /= 2;
    }
    sort_desc(x);
    return {x, fx};
}

SimplexOptimum maximize_on_simplex(int dim, const SymmetricObjective& f, const SimplexOptions& options) {
    if (dim < 1) throw DomainError("simplex dimension must be positive");
    if (dim == 1) {
        std::vector<double> one{1.0};
        const double v = f(one);
        return {{{one, v}}, v};
    }
    const int total = options.grid_n > 0 ? options.grid_n : default_grid_n(dim);

    std::vector<std::vector<int>> grid;
    grid_points(dim, total, grid);
    std::map<std::vector<int>, double> values;
    std::vector<double> x(dim);
    double grid_max = -INFINITY;
    for (const auto& g : grid) {
        for (int i = 0; i < dim; ++i) x[i] = static_cast<double>(g[i]) / total;
        const double v = f(x);
        values.emplace(g, v);
        grid_max = std::max(grid_max, v);
    }

    // local maxima under moving one grid unit between coordinates
    std::vector<std::pair<double, const std::vector<int>*>> local, band;
    std::vector<int> nb(dim);
    for (const auto& [g, v] : values) {
        bool is_local = true;
        for (int i = 0; i < dim && is_local; ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < dim && is_local; ++j) {
                if (i == j) continue;
                nb = g;
                --nb[i];
                ++nb[j];
                std::sort(nb.begin(), nb.end(), std::greater<>());
                if (nb == g) continue;
                if (values.at(nb) > v) is_local = false;
            }
        }
        if (is_local) local.emplace_back(v, &g);
        else if (v >= grid_max - options.start_band) band.emplace_back(v, &g);
    }
    auto by_value = [](const auto& a, const auto& b) { return a.first > b.first; };
    std::sort(local.begin(), local.end(), by_value);
    std::sort(band.begin(), band.end(), by_value);
    std::vector<const std::vector<int>*> starts;
    for (const auto& [v, g] : local) starts.push_back(g);
    for (const auto& [v, g] : band) starts.push_back(g);
    if (static_cast<int>(starts.size()) > options.max_starts) starts.resize(options.max_starts);

    std::vector<SimplexCandidate> found;
    for (const auto* g : starts) {
        for (int i = 0; i < dim; ++i) x[i] = static_cast<double>((*g)[i]) / total;
        found.push_back(ascend(f, x, 0.5 / total, options.final_step));
    }
    // double precision resolves a smooth maximiser only to ~1e-8; snap to the barycentre when it is as good
    const std::vector<double> centre(dim, 1.0 / dim);
    const double f_centre = f(centre);
    for (auto& c : found)
        if (max_abs_diff(c.x, centre) <= 1e-6 && f_centre >= c.value - 1e-13) c = {centre, f_centre};
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.value > b.value; });

    SimplexOptimum out;
    out.value = found.front().value;
    for (auto& c : found) {
        if (c.value < out.value - options.tie_tol) break;
        const bool dup = std::any_of(out.maximizers.begin(), out.maximizers.end(), [&](const auto& m) {
            return max_abs_diff(m.x, c.x) <= options.merge_dist;
        });
        if (!dup) out.maximizers.push_back(std::move(c));
    }
    return out;
}

}  // namespace orthospin
