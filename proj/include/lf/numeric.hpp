#pragma once
// Shared numeric types: exact big integers/rationals and high-precision
// reals (50 significant digits as the working type, 100 internally where
// extra headroom is wanted).

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace lf {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

using real = boost::multiprecision::cpp_bin_float_50;
using real100 = boost::multiprecision::cpp_bin_float_100;
using cplx = boost::multiprecision::cpp_complex_50;
using cplx100 = boost::multiprecision::cpp_complex_100;

enum class ArithmeticMode { EXACT, FLOAT };

inline const real& pi_const() {
    static const real pi = boost::math::constants::pi<real>();
    return pi;
}

inline const real100& pi_const100() {
    static const real100 pi = boost::math::constants::pi<real100>();
    return pi;
}

}  // namespace lf
