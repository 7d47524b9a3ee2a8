#include "orthospin/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "orthospin/errors.hpp"

namespace orthospin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -kInf);
    return v;
}

double up(double v, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) v = std::nextafter(v, kInf);
    return v;
}

// libm log/exp are faithful to within a couple of ulps
constexpr int kLibmUlps = 4;

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw DomainError("interval needs lo <= hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo_ + b.lo_), up(a.hi_ + b.hi_)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo_ - b.hi_), up(a.hi_ - b.lo_)}; }

Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b) {
    const double p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
    const double q[] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    return {down(*std::min_element(q, q + 4)), up(*std::max_element(q, q + 4))};
}

Interval log(const Interval& a) {
    if (a.lo() <= 0.0) throw DomainError("interval log of a non-positive argument");
    return {down(std::log(a.lo()), kLibmUlps), up(std::log(a.hi()), kLibmUlps)};
}

Interval exp(const Interval& a) {
    return {std::max(0.0, down(std::exp(a.lo()), kLibmUlps)), up(std::exp(a.hi()), kLibmUlps)};
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace orthospin
