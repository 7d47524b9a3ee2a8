#include "orthospin/appendix_checks.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <future>
#include <numbers>
#include <vector>

#include "orthospin/errors.hpp"
#include "orthospin/spectra.hpp"
#include "orthospin/tensor_ops.hpp"

namespace orthospin {

namespace {

template <class T>
T w_generic(const T& z, const T& log_z) {
    using std::log;
    const T one(1.0);
    const T d = T(3.0) * (one - z) + (one + z) * log_z;
    return T(1.5) + log_z * (one + T(5.0) * z) / (T(4.0) * (one - z)) + log(-(z * log_z) / d);
}

}  // namespace

Interval inner_denominator(const Interval& z) { return Interval(3.0) * (Interval(1.0) - z) + (Interval(1.0) + z) * log(z); }

Interval w_of_z(const Interval& z) {
    if (z.lo() <= 0.0 || z.hi() >= 1.0) throw DomainError("w needs z inside (0, 1)");
    return w_generic(z, log(z));
}

double w_of_z(double z) {
    return w_generic(z, std::log(z));
}

std::complex<double> w_of_z(std::complex<double> z) {
    return w_generic(z, std::log(z));
}

std::complex<double> w_prime(std::complex<double> z) {
    const std::complex<double> lz = std::log(z), one(1.0);
    const auto om = one - z;
    const auto a_prime = ((one + 5.0 * z) / z + 5.0 * lz) / (4.0 * om) + lz * (one + 5.0 * z) / (4.0 * om * om);
    const auto n = -z * lz;
    const auto n_prime = -lz - one;
    const auto d = 3.0 * om + (one + z) * lz;
    const auto d_prime = -3.0 + lz + (one + z) / z;
    return a_prime + n_prime / n - d_prime / d;
}

namespace {

CertifyReport certify_serial(const std::function<Interval(const Interval&)>& f, double a, double b, int depth0,
                             int max_depth) {
    CertifyReport report;
    struct Item {
        double lo, hi;
        int depth;
    };
    std::vector<Item> stack{{a, b, depth0}};
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        bool positive = false;
        try {
            positive = f(Interval(it.lo, it.hi)).lo() > 0.0;
        } catch (const DomainError&) {
            positive = false;
        }
        if (positive) {
            ++report.leaves;
            report.max_depth = std::max(report.max_depth, it.depth);
            continue;
        }
        const double mid = 0.5 * (it.lo + it.hi);
        if (it.depth >= max_depth || !(it.lo < mid && mid < it.hi)) {
            report.witness = Interval(it.lo, it.hi);
            report.max_depth = std::max(report.max_depth, it.depth);
            return report;
        }
        stack.push_back({mid, it.hi, it.depth + 1});
        stack.push_back({it.lo, mid, it.depth + 1});
    }
    report.certified = true;
    return report;
}

}  // namespace

CertifyReport certify_positive(const std::function<Interval(const Interval&)>& f, double a, double b, int max_depth) {
    if (!(a < b)) throw DomainError("certify_positive needs a < b");
    // fixed split into 2^split pieces so the merged report does not depend on scheduling
    const int split = std::min(6, max_depth);
    const int pieces = 1 << split;
    std::vector<std::future<CertifyReport>> jobs;
    for (int i = 0; i < pieces; ++i) {
        const double lo = i == 0 ? a : a + (b - a) * i / pieces;
        const double hi = i + 1 == pieces ? b : a + (b - a) * (i + 1) / pieces;
        jobs.push_back(std::async(std::launch::async, certify_serial, std::cref(f), lo, hi, split, max_depth));
    }
    CertifyReport out;
    out.certified = true;
    for (auto& j : jobs) {
        const CertifyReport r = j.get();
        out.leaves += r.leaves;
        out.max_depth = std::max(out.max_depth, r.max_depth);
        if (!r.certified && out.certified) {
            out.certified = false;
            out.witness = r.witness;
        }
    }
    return out;
}

CertifyReport certify_positive(double a, double b, int max_depth) {
    return certify_positive([](const Interval& z) { return w_of_z(z); }, a, b, max_depth);
}

Interval inner_denominator_root(double width) {
    // D < 0 near 0 and D > 0 at 1/2
    double lo = 0.01, hi = 0.5;
    if (!(inner_denominator(Interval(lo)).hi() < 0.0 && inner_denominator(Interval(hi)).lo() > 0.0))
        throw std::logic_error("inner denominator root is not bracketed");
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const Interval d = inner_denominator(Interval(mid));
        if (d.hi() < 0.0) lo = mid;
        else if (d.lo() > 0.0) hi = mid;
        else break;  // sign undecidable at this resolution
    }
    return {lo, hi};
}

WindingReport winding_zero_count(const std::function<std::complex<double>(std::complex<double>)>& log_derivative,
                                 std::complex<double> center, double radius, double h, int n) {
    using std::numbers::pi;
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> sum = 0.0;
    for (int k = -n; k <= n; ++k) {
        const double s = k * h;
        const double u = 0.5 * pi * std::sinh(s);
        const double c = std::cosh(u);
        const double weight = h * 0.5 * pi * std::cosh(s) / (c * c);
        if (weight == 0.0) continue;
        const double t = std::tanh(u);
        const std::complex<double> e = std::exp(i * pi * t);
        const std::complex<double> g = log_derivative(center + radius * e);
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
            throw DomainError("contour passes through a zero or singularity");
        sum += weight * (radius / 2.0) * e * g;
    }
    WindingReport out{sum, std::nullopt};
    const double nearest = std::round(sum.real());
    if (std::abs(sum - std::complex<double>(nearest, 0.0)) <= 1e-3) out.verified = static_cast<long>(nearest);
    return out;
}

WindingReport winding_zero_count(std::complex<double> center, double radius, double h, int n) {
    return winding_zero_count(
        [](std::complex<double> z) {
            const auto w = w_of_z(z);
            if (w == 0.0) throw DomainError("w vanishes on the contour");
            return w_prime(z) / w;
        },
        center, radius, h, n);
}

Eigen::MatrixXd target_sign_matrix(int theta) {
    if (theta < 2) throw DomainError("theta must be at least 2");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(theta, theta);
    // (−1)^{S−i}; for θ even S is a half-integer and the entry uses (−1)^{i}
    for (int i = 0; i < theta; ++i) {
        const int e = theta % 2 == 1 ? (theta - 1) / 2 - i : i;
        m(i, theta - 1 - i) = (e % 2 == 0) ? 1.0 : -1.0;
    }
    return m;
}

PsiResult construct_psi(int theta) {
    const Eigen::MatrixXd m = target_sign_matrix(theta);
    PsiResult out;
    out.symmetry_defect = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (theta % 2 == 0) {
        out.obstructed = true;
        return out;
    }
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd g1;
    g1 << -r, i * r, -r, -i * r;
    const Eigen::Matrix2cd g2 = i * g1;

    const int s = (theta - 1) / 2;
    const Eigen::MatrixXcd target = m.cast<C>();
    double best = INFINITY;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(theta, theta);
        psi(s, s) = 1.0;
        for (int b = 0; b < s; ++b) {
            const Eigen::Matrix2cd& g = (mask >> b) & 1u ? g2 : g1;
            const int p = b, q = theta - 1 - b;
            psi(p, p) = g(0, 0);
            psi(p, q) = g(0, 1);
            psi(q, p) = g(1, 0);
            psi(q, q) = g(1, 1);
        }
        const double res = (psi * psi.transpose() - target).cwiseAbs().maxCoeff();
        if (res < best) {
            best = res;
            out.psi = psi;
        }
    }
    out.psi_residual = best;
    out.unitarity_residual =
        (out.psi * out.psi.adjoint() - Eigen::MatrixXcd::Identity(theta, theta)).cwiseAbs().maxCoeff();
    return out;
}

EquivalenceReport verify_pq_equivalence(int theta, int n, double L1, double L2) {
    EquivalenceReport out;
    const PsiResult psi = construct_psi(theta);
    out.symmetry_defect = psi.symmetry_defect;
    out.obstructed = psi.obstructed;
    if (psi.obstructed) return out;
    out.psi_residual = psi.psi_residual;

    const TensorSpace two(theta, 2);
    const Eigen::MatrixXcd pp = Eigen::kroneckerProduct(psi.psi, psi.psi);
    const Eigen::MatrixXcd q = bar_operator(two, 0, 1, Flavor::Q).cast<std::complex<double>>();
    const Eigen::MatrixXcd p = bar_operator(two, 0, 1, Flavor::P).cast<std::complex<double>>();
    out.conjugation_residual = (pp * q * pp.adjoint() - p).cwiseAbs().maxCoeff();

    HamiltonianSpec spec;
    spec.theta = theta;
    spec.n = n;
    spec.L1 = L1;
    spec.L2 = L2;
    spec.flavor = Flavor::Q;
    const Eigen::VectorXd eq = dense_spectrum(spec);
    spec.flavor = Flavor::P;
    const Eigen::VectorXd ep = dense_spectrum(spec);
    out.spectrum_residual = (eq - ep).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace orthospin
