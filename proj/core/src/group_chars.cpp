#include "orthospin/group_chars.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "orthospin/errors.hpp"

namespace orthospin {

FieldDirection::FieldDirection(int theta, std::vector<double> weights)
    : theta_(theta), weights_(std::move(weights)) {
    if (theta < 2) throw DomainError("field direction needs theta >= 2");
    if (static_cast<int>(weights_.size()) != theta / 2)
        throw DomainError("field direction needs floor(theta/2) weights");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 0) throw DomainError("field weights must be non-negative");
        if (i > 0 && weights_[i] > weights_[i - 1]) throw DomainError("field weights must be descending");
    }
}

FieldDirection FieldDirection::standard(int theta) {
    if (theta == 2 || theta == 3) return FieldDirection(theta, {1.0});
    const double spin = (theta - 1) / 2.0;
    std::vector<double> w;
    for (int i = 0; i < theta / 2; ++i) w.push_back(spin - i);
    return FieldDirection(theta, std::move(w));
}

std::vector<double> FieldDirection::spectrum() const {
    std::vector<double> out;
    for (double w : weights_) {
        out.push_back(w);
        out.push_back(-w);
    }
    if (theta_ % 2 == 1) out.push_back(0.0);
    return out;
}

BigInt dim_so(const Partition& lambda, int theta) {
    const int r = theta / 2;
    if (theta < 2) throw DomainError("dim_so needs theta >= 2");
    if (lambda.length() > r) throw DomainError("dim_so: lambda has more than floor(theta/2) rows");
    const bool odd = theta % 2 == 1;
    // Work with doubled shifts so odd θ stays integral: 2(λ_i + r − i + ½).
    std::vector<BigInt> l(r), d(r);
    for (int i = 0; i < r; ++i) {
        const int shift2 = odd ? 2 * (r - i - 1) + 1 : 2 * (r - i - 1);
        d[i] = shift2;
        l[i] = 2 * lambda[i] + shift2;
    }
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= d[i] * d[i] - d[j] * d[j];
        }
    if (odd)
        for (int i = 0; i < r; ++i) {
            num *= l[i];
            den *= d[i];
        }
    if (num % den != 0) throw std::logic_error("Weyl dimension did not clear denominators");
    return num / den;
}

BigInt dim_o(const Partition& lambda, int theta) {
    if (!fits_orthogonal(lambda, theta))
        throw DomainError("dim_o: lambda violates the column condition for O(theta)");
    Partition mu = lambda;
    if (2 * mu.column(0) > theta) mu = column_flip(mu, theta);
    BigInt d = dim_so(mu, theta);
    if (theta % 2 == 0 && mu.length() == theta / 2) d *= 2;
    return d;
}

BigInt dim_gl(const Partition& rho, int theta) {
    if (rho.length() > theta) throw DomainError("dim_gl: rho has more than theta rows");
    BigInt num = 1, den = 1;
    for (int i = 0; i < theta; ++i)
        for (int j = i + 1; j < theta; ++j) {
            num *= rho[i] - rho[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

double orthogonal_jacobi_trudi(const Partition& lambda, const std::vector<double>& eigenvalues) {
    const int ell = lambda.length();
    if (ell == 0) return 1.0;
    const int kmax = lambda[0] + ell;
    // complete homogeneous symmetric polynomials h_0..h_kmax
    std::vector<double> h(kmax + 1, 0.0);
    h[0] = 1.0;
    for (double x : eigenvalues)
        for (int k = 1; k <= kmax; ++k) h[k] += x * h[k - 1];
    auto hk = [&](int k) { return k < 0 ? 0.0 : h[k]; };
    Eigen::MatrixXd m(ell, ell);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            const int base = lambda[i] - (i + 1);
            m(i, j) = hk(base + (j + 1)) - hk(base - (j + 1));
        }
    return m.determinant();
}

double char_o_field(const Partition& lambda, int theta, double h, const FieldDirection& dir) {
    if (dir.theta() != theta) throw DomainError("field direction built for a different theta");
    if (!fits_orthogonal(lambda, theta))
        throw DomainError("char_o_field: lambda violates the column condition for O(theta)");
    if (lambda.empty()) return 1.0;
    if (theta == 2) {
        if (lambda.length() == 2) return 1.0;  // (1,1), the determinant
        const double t = h * dir.weights()[0] * lambda[0];
        return std::exp(t) + std::exp(-t);
    }
    if (theta == 3) {
        Partition mu = 2 * lambda.column(0) > theta ? column_flip(lambda, theta) : lambda;
        const int a = mu[0];
        const double t = h * dir.weights()[0];
        double s = 1.0;
        for (int j = 1; j <= a; ++j) s += std::exp(t * j) + std::exp(-t * j);
        return s;
    }
    std::vector<double> eig;
    for (double ev : dir.spectrum()) eig.push_back(std::exp(h * ev));
    return orthogonal_jacobi_trudi(lambda, eig);
}

double char_o_field(const Partition& lambda, int theta, double h) {
    return char_o_field(lambda, theta, h, FieldDirection::standard(theta));
}

double char_ratio_o(const Partition& lambda, int theta, double h_over_n) {
    if (theta != 2 && theta != 3) throw DomainError("char_ratio_o is only available for theta 2 and 3");
    if (!fits_orthogonal(lambda, theta))
        throw DomainError("char_ratio_o: lambda violates the column condition for O(theta)");
    const double t = h_over_n;
    if (t == 0.0) return 1.0;
    if (theta == 2) {
        if (lambda.empty() || lambda.length() == 2) return 1.0;
        return std::cosh(t * lambda[0]);
    }
    Partition mu = 2 * lambda.column(0) > theta ? column_flip(lambda, theta) : lambda;
    const double a = mu[0];
    if (a == 0) return 1.0;
    return std::sinh(t * (a + 0.5)) / std::sinh(t / 2) / (2 * a + 1);
}

}  // namespace orthospin
