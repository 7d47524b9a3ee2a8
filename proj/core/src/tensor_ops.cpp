#include "orthospin/tensor_ops.hpp"

#include <cstdlib>
#include <string>

#include "orthospin/errors.hpp"

namespace orthospin {

std::size_t default_dense_cap() {
    if (const char* env = std::getenv("ORTHO_SPIN_DENSE_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 4096;
}

TensorSpace::TensorSpace(int theta, int n, std::size_t cap) : theta_(theta), n_(n), dim_(1) {
    if (theta < 1 || n < 0) throw DomainError("tensor space needs theta >= 1 and n >= 0");
    for (int i = 0; i < n; ++i) {
        dim_ *= static_cast<std::size_t>(theta);
        if (dim_ > cap)
            throw CapExceeded("theta^n = " + std::to_string(theta) + "^" + std::to_string(n) +
                              " exceeds the dense cap " + std::to_string(cap));
    }
}

std::vector<int> TensorSpace::digits(std::size_t index) const {
    std::vector<int> d(n_);
    for (int x = n_ - 1; x >= 0; --x) {
        d[x] = static_cast<int>(index % theta_);
        index /= theta_;
    }
    return d;
}

std::size_t TensorSpace::index(const std::vector<int>& digits) const {
    std::size_t s = 0;
    for (int a : digits) s = s * theta_ + static_cast<std::size_t>(a);
    return s;
}

namespace {

void add_swap(const TensorSpace& sp, Eigen::MatrixXd& m, std::size_t col, std::vector<int>& d, int x,
              int y, double coeff) {
    std::swap(d[x], d[y]);
    m(sp.index(d), col) += coeff;
    std::swap(d[x], d[y]);
}

void add_bar(const TensorSpace& sp, Eigen::MatrixXd& m, std::size_t col, std::vector<int>& d, int x,
             int y, double coeff, Flavor flavor) {
    const int th = sp.theta();
    const int bx = d[x], by = d[y];
    if (flavor == Flavor::Q) {
        if (bx != by) return;
        for (int c = 0; c < th; ++c) {
            d[x] = c;
            d[y] = c;
            m(sp.index(d), col) += coeff;
        }
    } else {
        if (by != th - 1 - bx) return;
        for (int c = 0; c < th; ++c) {
            d[x] = c;
            d[y] = th - 1 - c;
            // (−1)^{a_x − b_x}: spin values differ from digits by a sign flip and a shift
            const double sign = ((c - bx) % 2 == 0) ? 1.0 : -1.0;
            m(sp.index(d), col) += coeff * sign;
        }
    }
    d[x] = bx;
    d[y] = by;
}

}  // namespace

Eigen::MatrixXd pair_sum(const TensorSpace& space, double alpha, double beta, Flavor flavor) {
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t col = 0; col < space.dim(); ++col) {
        auto d = space.digits(col);
        for (int x = 0; x < space.n(); ++x)
            for (int y = x + 1; y < space.n(); ++y) {
                if (alpha != 0.0) add_swap(space, m, col, d, x, y, alpha);
                if (beta != 0.0) add_bar(space, m, col, d, x, y, beta, flavor);
            }
    }
    return m;
}

Eigen::MatrixXd swap_operator(const TensorSpace& space, int x, int y) {
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t col = 0; col < space.dim(); ++col) {
        auto d = space.digits(col);
        add_swap(space, m, col, d, x, y, 1.0);
    }
    return m;
}

Eigen::MatrixXd bar_operator(const TensorSpace& space, int x, int y, Flavor flavor) {
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t col = 0; col < space.dim(); ++col) {
        auto d = space.digits(col);
        add_bar(space, m, col, d, x, y, 1.0, flavor);
    }
    return m;
}

Eigen::MatrixXd three_cycle_sum(const TensorSpace& space) {
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    const int n = space.n();
    for (std::size_t col = 0; col < space.dim(); ++col) {
        const auto d = space.digits(col);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z) {
                    auto e = d;
                    e[x] = d[y], e[y] = d[z], e[z] = d[x];
                    m(space.index(e), col) += 1.0;
                    e[x] = d[z], e[y] = d[x], e[z] = d[y];
                    m(space.index(e), col) += 1.0;
                }
    }
    return m;
}

Eigen::VectorXcd apply_every_site(const TensorSpace& space, const Eigen::MatrixXcd& u,
                                  const Eigen::VectorXcd& v) {
    const int th = space.theta();
    Eigen::VectorXcd cur = v, next(v.size());
    std::size_t stride = 1;
    for (int x = space.n() - 1; x >= 0; --x) {
        const std::size_t block = stride * th;
        for (std::size_t base = 0; base < space.dim(); base += block)
            for (std::size_t off = 0; off < stride; ++off)
                for (int a = 0; a < th; ++a) {
                    std::complex<double> acc = 0.0;
                    for (int b = 0; b < th; ++b) acc += u(a, b) * cur(base + off + b * stride);
                    next(base + off + a * stride) = acc;
                }
        std::swap(cur, next);
        stride = block;
    }
    return cur;
}

Eigen::MatrixXcd site_sum(const TensorSpace& space, const Eigen::MatrixXcd& w) {
    const auto dim = static_cast<Eigen::Index>(space.dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const int th = space.theta();
    for (std::size_t col = 0; col < space.dim(); ++col) {
        auto d = space.digits(col);
        for (int x = 0; x < space.n(); ++x) {
            const int b = d[x];
            for (int a = 0; a < th; ++a) {
                if (w(a, b) == std::complex<double>(0.0)) continue;
                d[x] = a;
                m(space.index(d), col) += w(a, b);
            }
            d[x] = b;
        }
    }
    return m;
}

}  // namespace orthospin
