#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace orthospin {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace orthospin
