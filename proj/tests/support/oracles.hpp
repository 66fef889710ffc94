#pragma once

// Extended-precision reference values. These sum the defining series
// directly, without any of the transformations the library uses, and carry
// enough digits to absorb the cancellation of the alternating series at
// |z| = 250 (largest term ~1e104).

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace oracle {

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
using Big50 = boost::multiprecision::cpp_bin_float_50;

inline Big hyp1f1(const Big& a, const Big& b, const Big& z) {
    const Big tiny("1e-120");
    Big sum = 1;
    Big term = 1;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        sum += term;
        if (term == 0 || (k > abs(z) && abs(term) < tiny * abs(sum))) {
            return sum;
        }
    }
    throw std::runtime_error("oracle::hyp1f1 did not converge");
}

inline Big hyp2f2_11_32_2(const Big& z) {
    const Big tiny("1e-120");
    Big sum = 1;
    Big term = 1;
    for (int k = 0; k < 100000; ++k) {
        term *= z * (k + 1) / ((k + Big(1.5)) * (k + 2));
        sum += term;
        if (k > abs(z) && abs(term) < tiny * abs(sum)) {
            return sum;
        }
    }
    throw std::runtime_error("oracle::hyp2f2 did not converge");
}

inline Big50 gamma(const Big50& x) {
    return boost::math::tgamma(x);
}

inline double to_double(const Big& x) {
    return x.convert_to<double>();
}

inline double rel_err(double got, const Big& want) {
    return to_double(abs((Big(got) - want) / want));
}

// I_s(t) from the defining formulas, gamma0 = 1.
inline double i_s(double t, double s) {
    const Big tt(t);
    const Big z = -tt * tt / 4;
    if (s == 1.0) {
        return to_double(tt * tt / 2 * hyp2f2_11_32_2(z));
    }
    const Big a = (Big(s) - 1) / 2;
    const Big g = boost::math::tgamma(Big50(a)).convert_to<Big>();
    return to_double(2 * g * (1 - hyp1f1(a, Big("0.5"), z)));
}

}  // namespace oracle
