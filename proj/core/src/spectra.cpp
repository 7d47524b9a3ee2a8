#include "orthospin/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "orthospin/errors.hpp"
#include "orthospin/tableaux.hpp"

namespace orthospin {

ConvertedParams convert_parameters(const ModelParams& params, int theta) {
    if (const auto* c = std::get_if<CanonicalParams>(&params)) return {c->L1, c->L2, 0.0, Flavor::Q};
    if (const auto* k = std::get_if<XxzParams>(&params)) {
        if (theta != 2) throw DomainError("XXZ parameters describe spin 1/2 (theta = 2)");
        return {(k->K1 + k->K2) / 4, (k->K1 - k->K2) / 4, k->K1 / 4, Flavor::Q};
    }
    const auto& j = std::get<BlbqParams>(params);
    if (theta != 3) throw DomainError("bilinear-biquadratic parameters describe spin 1 (theta = 3)");
    return {j.J1, j.J2 - j.J1, -j.J2, Flavor::P};
}

Eigen::MatrixXcd default_field_matrix(int theta) {
    using C = std::complex<double>;
    if (theta < 2) throw DomainError("field matrix needs theta >= 2");
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(theta, theta);
    if (theta == 2) {
        w(0, 1) = C(0, 1);
        w(1, 0) = C(0, -1);
        return w;
    }
    // S^y = (S⁺ − S⁻)/(2i); index a ↔ m = S − a
    const double s = (theta - 1) / 2.0;
    for (int a = 1; a < theta; ++a) {
        const double m = s - a;  // S⁺ raises m to m+1 (index a to a−1)
        const double amp = std::sqrt(s * (s + 1) - m * (m + 1));
        w(a - 1, a) = C(0, -amp / 2);  // S⁺/(2i)
        w(a, a - 1) = C(0, amp / 2);   // −S⁻/(2i)
    }
    return w;
}

Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& w, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w);
    const Eigen::VectorXcd d = (t * es.eigenvalues().array()).exp().cast<std::complex<double>>();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXd build_hamiltonian_real(const HamiltonianSpec& spec) {
    if (spec.h != 0.0) throw DomainError("a field term makes the Hamiltonian complex");
    const TensorSpace space(spec.theta, spec.n, spec.dense_cap);
    return -pair_sum(space, spec.L1, spec.L2, spec.flavor);
}

Eigen::MatrixXcd build_hamiltonian(const HamiltonianSpec& spec) {
    const TensorSpace space(spec.theta, spec.n, spec.dense_cap);
    Eigen::MatrixXcd h = (-pair_sum(space, spec.L1, spec.L2, spec.flavor)).cast<std::complex<double>>();
    if (spec.h != 0.0) {
        const Eigen::MatrixXcd w = spec.field_matrix ? *spec.field_matrix : default_field_matrix(spec.theta);
        if (w.rows() != spec.theta || w.cols() != spec.theta) throw DomainError("field matrix must be theta x theta");
        if ((w + w.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("field matrix must satisfy W^T = -W");
        if ((w - w.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("field matrix must be Hermitian");
        h -= (spec.n * spec.h) * site_sum(space, w);
    }
    return h;
}

Eigen::VectorXd dense_spectrum(const HamiltonianSpec& spec) {
    if (spec.h == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian_real(spec), Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(build_hamiltonian(spec), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double line_eigenvalue(const LambdaRhoPair& pair, int theta, double L1, double L2) {
    return -((L1 + L2) * content_sum(pair.rho) -
             L2 * (content_sum(pair.lambda) + pair.k * (1 - theta)));
}

std::vector<SpectralLine> spectral_lines(int n, int theta, double L1, double L2, const PnOptions& options) {
    std::vector<SpectralLine> out;
    for (const auto& e : enumerate_Pn(n, theta, options)) {
        BigInt mult = dim_o(e.pair.lambda, theta) * dim_sn(e.pair.rho) * e.b;
        out.push_back({e.pair.lambda, e.pair.k, e.pair.rho, line_eigenvalue(e.pair, theta, L1, L2), std::move(mult)});
    }
    return out;
}

double z_direct(const HamiltonianSpec& spec) {
    const Eigen::VectorXd e = dense_spectrum(spec);
    return (-e.array() / spec.n).exp().sum();
}

double z_decomposed(int n, int theta, double L1, double L2, double h, const FieldDirection& dir) {
    if (theta != 2 && theta != 3) throw DomainError("z_decomposed needs exact branching (theta 2 or 3)");
    double z = 0.0;
    for (const auto& e : enumerate_Pn(n, theta)) {
        const double weight = h == 0.0 ? to_double(dim_o(e.pair.lambda, theta))
                                       : char_o_field(e.pair.lambda, theta, h, dir);
        const double boltzmann = std::exp(-line_eigenvalue(e.pair, theta, L1, L2) / n);
        z += weight * static_cast<double>(e.b) * to_double(dim_sn(e.pair.rho)) * boltzmann;
    }
    return z;
}

double z_decomposed(int n, int theta, double L1, double L2, double h) {
    return z_decomposed(n, theta, L1, L2, h, FieldDirection::standard(theta));
}

TotalSpin total_spin_observable(int n, int theta, double L1, double L2, double h, std::size_t cap) {
    if (theta != 2 && theta != 3) throw DomainError("total spin needs theta 2 or 3");
    const double t = h / n;

    double num = 0.0, den = 0.0;
    for (const auto& e : enumerate_Pn(n, theta)) {
        const double common = static_cast<double>(e.b) * to_double(dim_sn(e.pair.rho)) *
                              std::exp(-line_eigenvalue(e.pair, theta, L1, L2) / n);
        num += char_o_field(e.pair.lambda, theta, t) * common;
        den += to_double(dim_o(e.pair.lambda, theta)) * common;
    }
    TotalSpin out{0.0, num / den};

    HamiltonianSpec spec{theta, n, L1, L2, 0.0, Flavor::Q, std::nullopt, cap};
    const TensorSpace space(theta, n, cap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian_real(spec));
    const Eigen::MatrixXcd g = hermitian_exp(default_field_matrix(theta), t);
    double dnum = 0.0, dden = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double wgt = std::exp(-es.eigenvalues()(i) / n);
        const Eigen::VectorXcd v = es.eigenvectors().col(i).cast<std::complex<double>>();
        dnum += wgt * v.dot(apply_every_site(space, g, v)).real();
        dden += wgt;
    }
    out.dense = dnum / dden;
    return out;
}

double total_spin_limit(int theta, double h, double y1star) {
    const double x = h * y1star;
    if (theta == 2) return std::cosh(x);
    if (theta == 3) return x == 0.0 ? 1.0 : std::sinh(x) / x;
    throw DomainError("total spin limit is known for theta 2 and 3");
}

Eigen::VectorXd dimer_ground_state(int n, int theta, Flavor flavor, std::size_t cap) {
    if (n % 2 != 0) throw DomainError("dimer state needs an even number of sites");
    const TensorSpace space(theta, n, cap);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.dim()));
    // pair factor ⟨a,b|u⟩
    auto pair_amp = [&](int a, int b) -> double {
        if (flavor == Flavor::Q) return a == b ? 1.0 : 0.0;
        return b == theta - 1 - a ? ((a % 2 == 0) ? 1.0 : -1.0) : 0.0;
    };
    std::vector<std::pair<int, int>> pairing;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> void {
        int x = 0;
        while (x < n && used[x]) ++x;
        if (x == n) {
            for (std::size_t s = 0; s < space.dim(); ++s) {
                const auto d = space.digits(s);
                double amp = 1.0;
                for (auto [p, q] : pairing) {
                    amp *= pair_amp(d[p], d[q]);
                    if (amp == 0.0) break;
                }
                v(static_cast<Eigen::Index>(s)) += amp;
            }
            return;
        }
        used[x] = 1;
        for (int y = x + 1; y < n; ++y) {
            if (used[y]) continue;
            used[y] = 1;
            pairing.emplace_back(x, y);
            self(self);
            pairing.pop_back();
            used[y] = 0;
        }
        used[x] = 0;
    };
    rec(rec);
    return v;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> ising_product_states(int n, std::size_t cap) {
    const TensorSpace space(2, n, cap);
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::VectorXcd plus(dim), minus(dim);
    const std::complex<double> i(0, 1);
    for (std::size_t s = 0; s < space.dim(); ++s) {
        int downs = 0;
        for (int a : space.digits(s)) downs += a;
        plus(static_cast<Eigen::Index>(s)) = std::pow(i, downs);
        minus(static_cast<Eigen::Index>(s)) = std::pow(-i, downs);
    }
    return {plus, minus};
}

}  // namespace orthospin
