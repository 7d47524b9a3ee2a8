#pragma once

#include <iosfwd>

namespace orthospin {

// Closed interval with outward rounding: every result is widened by a few ulps,
// so it contains the exact image of its inputs.
class Interval {
public:
    Interval() = default;
    Interval(double v) : lo_(v), hi_(v) {}  // NOLINT: exact point
    Interval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double mid() const noexcept { return 0.5 * (lo_ + hi_); }
    double width() const noexcept { return hi_ - lo_; }
    bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }
    bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);  // DomainError if b ∋ 0

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval log(const Interval& a);  // DomainError unless a > 0
Interval exp(const Interval& a);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace orthospin
