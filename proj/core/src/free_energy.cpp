#include "orthospin/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orthospin/errors.hpp"

namespace orthospin {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

constexpr double kPointTol = 1e-12;

void check_theta(int theta) {
    if (theta < 2) throw DomainError("theta must be at least 2");
}

}  // namespace

double phi(int theta, double L1, double L2, const SimplexPoint& p) {
    check_theta(theta);
    const auto t = static_cast<std::size_t>(theta);
    if (p.x.size() != t || p.y.size() != t) throw DomainError("point must have theta coordinates");
    double sum = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        if (p.x[i] < -kPointTol) throw DomainError("x must be non-negative");
        if (i > 0 && p.x[i] > p.x[i - 1] + kPointTol) throw DomainError("x must be weakly decreasing");
        sum += p.x[i];
    }
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("x must sum to 1");
    for (std::size_t i = 1; i < t; ++i)
        if (p.y[i] != 0.0) throw DomainError("only y1 may be non-zero");
    if (p.y[0] < -kPointTol || p.y[0] > p.x[0] - p.x[t - 1] + kPointTol)
        throw DomainError("y1 must lie in [0, x1 - x_theta]");

    double sq = 0.0, ent = 0.0;
    for (double xi : p.x) {
        sq += xi * xi;
        ent += xlogx(std::max(xi, 0.0));
    }
    return 0.5 * ((L1 + L2) * sq - L2 * p.y[0] * p.y[0]) - ent;
}

InnerY inner_y(double L2, double h, double d) {
    const double a = std::abs(h);
    d = std::max(d, 0.0);
    if (L2 > 0.0) {
        const double y = std::min(a / L2, d);
        return {-0.5 * L2 * y * y + a * y, y, y};
    }
    if (L2 < 0.0) return {-0.5 * L2 * d * d + a * d, d, d};
    if (a > 0.0) return {a * d, d, d};
    return {0.0, 0.0, d};
}

MaximizeResult maximize_phi(int theta, double L1, double L2, double h, const SimplexOptions& options) {
    check_theta(theta);
    if (theta >= 4 && L2 < 0.0) throw NotProven("free energy for theta >= 4 with L2 < 0 is not available");
    if (theta >= 4 && h != 0.0) throw DomainError("field term is supported for theta 2 and 3");

    const double s = L1 + L2;
    auto objective = [=](std::span<const double> x) {
        double sq = 0.0, ent = 0.0;
        double hi = x[0], lo = x[0];
        for (double xi : x) {
            sq += xi * xi;
            ent += xlogx(xi);
            hi = std::max(hi, xi);
            lo = std::min(lo, xi);
        }
        return 0.5 * s * sq - ent + inner_y(L2, h, hi - lo).value;
    };
    const SimplexOptimum opt = maximize_on_simplex(theta, objective, options);

    MaximizeResult out;
    out.value = opt.value;
    for (const auto& c : opt.maximizers) {
        const InnerY iy = inner_y(L2, h, c.x.front() - c.x.back());
        Maximizer m;
        m.point.x = c.x;
        m.point.y.assign(c.x.size(), 0.0);
        m.point.y[0] = iy.y_lo;
        m.y1_lo = iy.y_lo;
        m.y1_hi = iy.y_hi;
        m.value = c.value;
        out.maximizers.push_back(std::move(m));
    }
    return out;
}

FreeEnergy free_energy(int theta, const ModelParams& params, const SimplexOptions& options) {
    const ConvertedParams c = convert_parameters(params, theta);
    MaximizeResult m = maximize_phi(theta, c.L1, c.L2, 0.0, options);
    const double v = m.value;
    return {v, c.constant_shift, v - c.constant_shift / 2, std::move(m)};
}

double beta_c(int theta) {
    check_theta(theta);
    if (theta == 2) return 2.0;
    const double t = theta;
    return 2.0 * ((t - 1) / (t - 2)) * std::log(t - 1);
}

double beta_of_xstar(int theta, double x) {
    check_theta(theta);
    const double t = theta;
    if (!(x > 1 - 1 / t && x < 1)) throw DomainError("x must lie in (1 - 1/theta, 1)");
    return (t - 1) / (t * x - 1) * std::log(x * (t - 1) / (1 - x));
}

double field_free_energy(int theta, double L1, double L2, double h, const SimplexOptions& options) {
    if (theta != 2 && theta != 3) throw DomainError("field free energy is supported for theta 2 and 3");
    return maximize_phi(theta, L1, L2, h, options).value;
}

OneSided one_sided_derivatives(int theta, double L1, double L2, const SimplexOptions& options) {
    if (theta != 2 && theta != 3) throw DomainError("one-sided derivatives are supported for theta 2 and 3");
    const MaximizeResult m = maximize_phi(theta, L1, L2, 0.0, options);
    OneSided out{-INFINITY, INFINITY};
    for (const auto& mx : m.maximizers) {
        out.y1_up = std::max(out.y1_up, mx.y1_hi);
        out.y1_down = std::min(out.y1_down, mx.y1_lo);
    }
    return out;
}

std::string to_string(Phase p) {
    switch (p) {
        case Phase::Disordered: return "disordered";
        case Phase::Ising: return "ising";
        case Phase::XY: return "xy";
        case Phase::Nematic: return "nematic";
        case Phase::Ferromagnetic: return "ferromagnetic";
        case Phase::FourthPhase: return "fourth";
        case Phase::Ordered: return "ordered";
        case Phase::Boundary: return "boundary";
    }
    return "?";
}

namespace {

constexpr double kBoundaryBand = 1e-9;

double symmetric_value(int theta, double L1, double L2) {
    return (L1 + L2) / (2.0 * theta) + std::log(static_cast<double>(theta));
}

// true iff no point beats the symmetric point by more than tol
bool symmetric_is_max(int theta, double L1, double L2, const SimplexOptions& options, double tol = 1e-11) {
    return maximize_phi(theta, L1, L2, 0.0, options).value <= symmetric_value(theta, L1, L2) + tol;
}

}  // namespace

bool in_disordered_region(double J1, double J2, const SimplexOptions& options) {
    if (J2 > J1) return J2 <= beta_c(3);
    // the symmetric point stops being a local maximum past 2J1 − J2 = 3
    if (2 * J1 - J2 > 3) return false;
    return symmetric_is_max(3, J1, J2 - J1, options);
}

PhaseResult classify_phase(int theta, const ModelParams& params, const SimplexOptions& options) {
    const ConvertedParams c = convert_parameters(params, theta);
    PhaseResult out;
    if (theta == 2) {
        const double K1 = 2 * (c.L1 + c.L2), K2 = 2 * (c.L1 - c.L2);
        out.max = maximize_phi(2, c.L1, c.L2, 0.0, options);
        const bool on_line = (std::abs(K1 - 4) <= kBoundaryBand && K2 <= 4 + kBoundaryBand) ||
                             (std::abs(K2 - 4) <= kBoundaryBand && K1 <= 4 + kBoundaryBand) ||
                             (std::abs(K1 - K2) <= kBoundaryBand && K1 >= 4 - kBoundaryBand);
        if (on_line) out.phase = Phase::Boundary;
        else if (K1 <= 4 && K2 <= 4) out.phase = Phase::Disordered;
        else if (K2 > K1) out.phase = Phase::Ising;
        else out.phase = Phase::XY;
        return out;
    }
    if (theta == 3) {
        const double J1 = c.L1, J2 = c.L1 + c.L2;
        out.max = maximize_phi(3, c.L1, c.L2, 0.0, options);
        if (J2 > J1) {
            if (std::abs(J2 - beta_c(3)) <= kBoundaryBand) out.phase = Phase::Boundary;
            else out.phase = J2 < beta_c(3) ? Phase::Disordered : Phase::Nematic;
            return out;
        }
        if (in_disordered_region(J1, J2, options)) {
            out.phase = Phase::Disordered;
            return out;
        }
        if (std::abs(J1) <= kBoundaryBand) {
            if (J2 <= -3) throw NotProven("phase on the half-line J1 = 0, J2 <= -3 is not established");
            out.phase = Phase::Boundary;
            return out;
        }
        out.phase = J1 > 0 ? Phase::Ferromagnetic : Phase::FourthPhase;
        out.conjectured = J1 > 0;
        return out;
    }
    if (c.L2 < 0) throw NotProven("phase diagram for theta >= 4 with L2 < 0 is not available");
    out.max = maximize_phi(theta, c.L1, c.L2, 0.0, options);
    const double b = c.L1 + c.L2;
    if (std::abs(b - beta_c(theta)) <= kBoundaryBand) out.phase = Phase::Boundary;
    else out.phase = b < beta_c(theta) ? Phase::Disordered : Phase::Ordered;
    return out;
}

std::vector<std::pair<double, double>> trace_curve_C(int resolution, double j2_min, const SimplexOptions& options) {
    if (resolution < 10) throw DomainError("curve resolution must be at least 10");
    const double top = beta_c(3);
    if (!(j2_min < top)) throw DomainError("j2_min must lie below log 16");
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < resolution; ++i) {
        // stop just short of the corner where two maximisers tie exactly
        const double J2 = i + 1 == resolution ? top - 1e-9 : j2_min + (top - j2_min) * i / (resolution - 1);
        double lo = J2, hi = (J2 + 3) / 2 + 1e-3;
        if (hi < lo) hi = lo + 1e-3;
        if (!in_disordered_region(lo, J2, options) || in_disordered_region(hi, J2, options))
            throw std::logic_error("curve bisection is not bracketed");
        while (hi - lo > 1e-11) {
            const double mid = 0.5 * (lo + hi);
            (in_disordered_region(mid, J2, options) ? lo : hi) = mid;
        }
        out.emplace_back(0.5 * (lo + hi), J2);
    }
    return out;
}

double quadratic_alpha(double J1, double J2) {
    if (J1 > 0 && J1 > J2) return 1.0;
    if (J1 < 0 && J1 > 0.5 * J2) return std::clamp(J2 / (J1 + J2), 0.5, 1.0);
    if (J1 == 0.5 * J2 && J1 < 0) return 2.0 / 3.0;
    throw DomainError("(J1, J2) lies outside the ferromagnetic and fourth-phase wedges");
}

double phi_j(double J1, double J2, double x1, double x2) {
    const double x3 = 1 - x1 - x2;
    if (x1 <= 0 || x2 <= 0 || x3 <= 0) throw DomainError("point must be interior");
    const double a = 2 * x1 + x2 - 1;
    return 0.5 * (J2 * (-2 * x1 * x1 + x2 * x2 - 2 * x1 * x2 + 2 * x1) + J1 * a * a) - xlogx(x1) - xlogx(x2) -
           xlogx(x3);
}

std::pair<double, double> phi_j_gradient(double J1, double J2, double x1, double x2) {
    const double x3 = 1 - x1 - x2;
    if (x1 <= 0 || x2 <= 0 || x3 <= 0) throw DomainError("point must be interior");
    const double a = 2 * x1 + x2 - 1;
    return {(2 * J1 - J2) * a - std::log(x1) + std::log(x3),
            J1 * a + J2 * (x2 - x1) - std::log(x2) + std::log(x3)};
}

}  // namespace orthospin
